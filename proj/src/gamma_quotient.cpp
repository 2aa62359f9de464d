#include "conekernels/gamma_quotient.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace conekernels {

namespace {

Rational frac_part(const Rational& s) {
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), s.get_num_mpz_t(), s.get_den_mpz_t());
  return s - Rational(f);
}

// Multiplies (acc_scale, acc_poly) by (c*x + s).
void mul_linear(Rational& scale, ZPoly& poly, int c, const Rational& s) {
  if (c == 0) {
    scale *= s;
    return;
  }
  // c*x + s = (1/den) * (c*den*x + num)
  Integer den = s.get_den();
  ZPoly lin = zpoly::linear(Integer(c) * den, s.get_num());
  Integer g;
  zpoly::make_primitive(lin, g);
  Rational f(g, den);
  f.canonicalize();
  scale *= f;
  poly = zpoly::mul(poly, lin);
}

}  // namespace

Rational gamma_constant(const Rational& s, int& sqrtPiPower) {
  if (s.get_den() == 1) {
    if (sgn(s) <= 0) throw DivisionByZero("Gamma pole at " + s.get_str());
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), s.get_num().get_ui() - 1);
    return Rational(f);
  }
  if (s.get_den() == 2) {
    sqrtPiPower += 1;
    Rational v = 1, t = Rational(1, 2);
    while (t < s) {
      v *= t;
      t += 1;
    }
    while (t > s) {
      t -= 1;
      v /= t;
    }
    return v;
  }
  throw IrreducibleGamma("Gamma(" + s.get_str() + ") is not a rational multiple of a power of sqrt(pi)");
}

GammaQuotient& GammaQuotient::mul(int c, const Rational& s) {
  num_.push_back({c, s});
  return *this;
}

GammaQuotient& GammaQuotient::div(int c, const Rational& s) {
  den_.push_back({c, s});
  return *this;
}

GammaQuotient& GammaQuotient::mul_gindikin(int r, int a, int c, const Rational& s) {
  for (int j = 0; j < r; ++j) mul(c, s - frac(j * a, 2));
  return *this;
}

GammaQuotient& GammaQuotient::div_gindikin(int r, int a, int c, const Rational& s) {
  for (int j = 0; j < r; ++j) div(c, s - frac(j * a, 2));
  return *this;
}

GammaQuotient& GammaQuotient::mul_pi_power(int k) {
  sqrtPi_ += 2 * k;
  return *this;
}

GammaQuotient& GammaQuotient::mul_rational(const Rational& q) {
  factor_ *= q;
  return *this;
}

GammaQuotient::Reduced GammaQuotient::reduce() const {
  using Key = std::pair<int, Rational>;
  std::map<Key, std::pair<std::vector<Rational>, std::vector<Rational>>> classes;
  for (const auto& g : num_) classes[{g.c, frac_part(g.s)}].first.push_back(g.s);
  for (const auto& g : den_) classes[{g.c, frac_part(g.s)}].second.push_back(g.s);

  Rational nscale = factor_, dscale = 1;
  ZPoly npoly{Integer(1)}, dpoly{Integer(1)};
  int sqrtPi = sqrtPi_;
  for (auto& [key, lists] : classes) {
    auto& [ns, ds] = lists;
    int c = key.first;
    std::sort(ns.begin(), ns.end());
    std::sort(ds.begin(), ds.end());
    if (c > 0 && ns.size() != ds.size())
      throw IrreducibleGamma("unpaired Gamma factors depending on the variable");
    size_t k = std::min(ns.size(), ds.size());
    for (size_t i = 0; i < k; ++i) {
      // Gamma(cx+s1)/Gamma(cx+s2) with s1 - s2 an integer
      Rational diff = ns[i] - ds[i];
      long n = diff.get_num().get_si();
      if (n >= 0) {
        for (long j = 0; j < n; ++j) mul_linear(nscale, npoly, c, ds[i] + j);
      } else {
        for (long j = 0; j < -n; ++j) mul_linear(dscale, dpoly, c, ns[i] + j);
      }
    }
    for (size_t i = k; i < ns.size(); ++i) nscale *= gamma_constant(ns[i], sqrtPi);
    for (size_t i = k; i < ds.size(); ++i) {
      int sp = 0;
      dscale *= gamma_constant(ds[i], sp);
      sqrtPi -= sp;
    }
  }
  if (sgn(dscale) == 0 || dpoly.empty()) throw DivisionByZero("Gamma quotient has a vanishing denominator");
  Reduced out;
  if (sgn(nscale) == 0) {
    out.value = RatFun();
  } else {
    ZPoly g = zpoly::gcd(npoly, dpoly);
    if (!zpoly::is_one(g)) {
      npoly = *zpoly::divexact(npoly, g);
      dpoly = *zpoly::divexact(dpoly, g);
    }
    out.value = RatFun::from_coprime(nscale / dscale, std::move(npoly), std::move(dpoly));
  }
  out.sqrtPiPower = sqrtPi;
  return out;
}

}  // namespace conekernels
