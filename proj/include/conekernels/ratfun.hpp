#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "conekernels/zpoly.hpp"

namespace conekernels {

struct DivisionByZero : std::domain_error {
  using std::domain_error::domain_error;
};

// Dense polynomial in one variable over Q, coefficients low to high.
class PolyNu {
 public:
  PolyNu() = default;
  explicit PolyNu(std::vector<Rational> coeffs);
  static PolyNu constant(const Rational& c);
  static PolyNu variable();

  const std::vector<Rational>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Rational eval(const Rational& v) const;

  friend bool operator==(const PolyNu&, const PolyNu&) = default;

 private:
  std::vector<Rational> c_;
};

// Element of Q(x) in canonical form: scale * num / den where num and den are
// coprime primitive integer polynomials with positive leading coefficients.
class RatFun {
 public:
  RatFun() : scale_(0), num_{Integer(1)}, den_{Integer(1)} {}
  RatFun(long v) : RatFun(Rational(v)) {}  // NOLINT(google-explicit-constructor)
  RatFun(const Rational& v);                // NOLINT(google-explicit-constructor)
  RatFun(const PolyNu& num, const PolyNu& den);

  static RatFun variable();
  static RatFun linear(const Rational& c1, const Rational& c0);  // c1*x + c0
  static RatFun from_zpoly(const ZPoly& num);
  // num and den are assumed coprime; contents and signs are normalized here.
  static RatFun from_coprime(Rational scale, ZPoly num, ZPoly den);

  bool is_zero() const { return sgn(scale_) == 0; }
  bool is_constant() const { return num_.size() == 1 && den_.size() == 1; }
  bool is_polynomial() const { return den_.size() == 1; }
  Rational constant_value() const;  // throws unless is_constant()

  PolyNu numerator() const;
  PolyNu denominator() const;
  const Rational& scale() const { return scale_; }
  const ZPoly& num_primitive() const { return num_; }
  const ZPoly& den_primitive() const { return den_; }
  int num_degree() const { return is_zero() ? -1 : zpoly::degree(num_); }
  int den_degree() const { return zpoly::degree(den_); }

  Rational eval(const Rational& v) const;  // DivisionByZero at a pole
  RatFun subst_affine(const Rational& c1, const Rational& c0) const;  // f(c1*x + c0)

  RatFun operator-() const;
  RatFun& operator+=(const RatFun& o);
  RatFun& operator-=(const RatFun& o);
  RatFun& operator*=(const RatFun& o);
  RatFun& operator/=(const RatFun& o);
  friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
  friend RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }
  friend RatFun operator*(RatFun a, const RatFun& b) { return a *= b; }
  friend RatFun operator/(RatFun a, const RatFun& b) { return a /= b; }
  RatFun inverse() const;
  RatFun pow(int e) const;

  friend bool operator==(const RatFun& a, const RatFun& b) {
    return a.scale_ == b.scale_ && a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string(const std::string& var = "nu") const;
  friend std::ostream& operator<<(std::ostream& os, const RatFun& f);

 private:
  void normalize_sign();
  Rational scale_;
  ZPoly num_;
  ZPoly den_;
};

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
// n/d in lowest terms; mpq_class(n, d) does not canonicalize.
inline Rational frac(long n, long d) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}
inline bool is_zero(const RatFun& x) { return x.is_zero(); }

Rational parse_rational(const std::string& s);  // "p", "-p/q"; throws std::invalid_argument
std::string to_string(const Rational& q);

}  // namespace conekernels
