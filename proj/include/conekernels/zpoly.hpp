#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace conekernels {

using Integer = mpz_class;
using Rational = mpq_class;

// Dense univariate integer polynomial, coefficients low to high.
// The zero polynomial is the empty vector; no trailing zeros otherwise.
using ZPoly = std::vector<Integer>;

namespace zpoly {

void trim(ZPoly& p);
int degree(const ZPoly& p);  // -1 for zero
bool is_zero(const ZPoly& p);
bool is_one(const ZPoly& p);
const Integer& lead(const ZPoly& p);

ZPoly add(const ZPoly& x, const ZPoly& y);
ZPoly sub(const ZPoly& x, const ZPoly& y);
ZPoly mul(const ZPoly& x, const ZPoly& y);
ZPoly scale(const ZPoly& x, const Integer& c);
void add_scaled(ZPoly& acc, const ZPoly& x, const Integer& c);  // acc += c*x
ZPoly linear(const Integer& c1, const Integer& c0);               // c1*x + c0

Integer content(const ZPoly& p);  // nonnegative gcd of the coefficients
ZPoly primitive(const ZPoly& p);  // p / content, sign kept
void make_primitive(ZPoly& p, Integer& removed);

// x / y when the quotient lies in Z[x], nullopt otherwise.
std::optional<ZPoly> divexact(const ZPoly& x, const ZPoly& y);

// Primitive gcd with positive leading coefficient.
ZPoly gcd(const ZPoly& x, const ZPoly& y);

// x evaluated at num/den, returned as the integer den^deg(x) * x(num/den).
Integer eval_homogeneous(const ZPoly& x, const Integer& num, const Integer& den);
Rational eval(const ZPoly& x, const Rational& v);

std::string to_string(const ZPoly& p, const std::string& var);

}  // namespace zpoly
}  // namespace conekernels
