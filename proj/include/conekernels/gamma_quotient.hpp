#pragma once

#include <stdexcept>
#include <vector>

#include "conekernels/ratfun.hpp"

namespace conekernels {

struct IrreducibleGamma : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Gamma(c*x + s) with integer c >= 0.
struct GammaArg {
  int c = 0;
  Rational s;
};

// Product of Gamma factors and powers of sqrt(pi), reducible to a rational
// function when the x-dependent factors pair up with integer offsets.
class GammaQuotient {
 public:
  struct Reduced {
    RatFun value;
    int sqrtPiPower = 0;  // value carries sqrt(pi)^sqrtPiPower
  };

  GammaQuotient& mul(int c, const Rational& s);
  GammaQuotient& div(int c, const Rational& s);
  // Gindikin Gamma of a rank-r cone with multiplicity a at c*x + s.
  GammaQuotient& mul_gindikin(int r, int a, int c, const Rational& s);
  GammaQuotient& div_gindikin(int r, int a, int c, const Rational& s);
  GammaQuotient& mul_pi_power(int k);  // pi^k
  GammaQuotient& mul_rational(const Rational& q);

  const std::vector<GammaArg>& numerator() const { return num_; }
  const std::vector<GammaArg>& denominator() const { return den_; }

  Reduced reduce() const;

 private:
  std::vector<GammaArg> num_, den_;
  int sqrtPi_ = 0;
  Rational factor_ = 1;
};

// Gamma(s) for s a positive integer or a half-integer, as q * sqrt(pi)^k.
Rational gamma_constant(const Rational& s, int& sqrtPiPower);

}  // namespace conekernels
