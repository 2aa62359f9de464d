#include <cmath>
#include <random>

#include "conekernels/selberg.hpp"
#include "conekernels/spherical.hpp"
#include "doctest.h"

using namespace conekernels;

namespace {

RatFun nu() { return RatFun::variable(); }

RatFun poch_nu(long s, int k) {  // (nu + s)_k
  RatFun acc(1);
  for (int i = 0; i < k; ++i) acc *= nu() + RatFun(s + i);
  return acc;
}

Integer fact(int n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

// Polynomials in r variables as exponent -> coefficient, integrated over the
// unit cube monomial by monomial: the oracle for integer nu compact moments.
using Poly = std::map<std::vector<int>, Rational>;

Poly pmul(const Poly& f, const Poly& g) {
  Poly out;
  for (const auto& [e1, c1] : f)
    for (const auto& [e2, c2] : g) {
      std::vector<int> e(e1.size());
      for (size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
      out[e] += c1 * c2;
    }
  return out;
}

Poly linear_poly(int r, int i, Rational c0, Rational c1, int j = -1, Rational cj = 0) {
  Poly p;
  p[std::vector<int>(r, 0)] += c0;
  std::vector<int> e(r, 0);
  e[i] = 1;
  p[e] += c1;
  if (j >= 0) {
    std::vector<int> f(r, 0);
    f[j] = 1;
    p[f] += cj;
  }
  return p;
}

Rational cube_integral(const Poly& f) {
  Rational acc = 0;
  for (const auto& [e, c] : f) {
    Rational t = c;
    for (int v : e) t /= v + 1;
    acc += t;
  }
  return acc;
}

// int_{[0,1]^r} m_lambda(t) t^b (1-t)^nu (t_i - t_j)^a for even a
Rational compact_hat_oracle(const Signature& lambda, const DomainParams& P, int nuv) {
  const int r = P.r;
  Poly f;
  for (const auto& alpha : monomial_orbit(lambda, r)) {
    std::vector<int> e(r);
    for (int i = 0; i < r; ++i) e[i] = alpha[i] + P.b;
    f[e] += 1;
  }
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < nuv; ++k) f = pmul(f, linear_poly(r, i, 1, -1));
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j)
      for (int k = 0; k < P.a; ++k) f = pmul(f, linear_poly(r, i, 0, 1, j, -1));
  return cube_integral(f);
}

double to_double(const Rational& q) { return q.get_d(); }

}  // namespace

TEST_CASE("rank one Beta moments") {
  for (int b = 0; b <= 3; ++b) {
    auto P = domain_params(1, 2, b);
    for (int k = 0; k <= 5; ++k) {
      // (k+b)! / (nu - k - b - 1)_{k+b+1}
      RatFun want = RatFun(Rational(fact(k + b))) / poch_nu(-k - b - 1, k + b + 1);
      CHECK(moment_chamber(Signature{k}, P, WeightKind::Noncompact) == want);
      CHECK(moment_even(Signature{k}, P, WeightKind::Noncompact) == want);
    }
  }
}

TEST_CASE("rank two total masses") {
  auto P = domain_params(2, 1, 0);
  RatFun want = RatFun(2) / ((nu() - 1) * (nu() - 2) * (2 * nu() - 3));
  CHECK(moment_chamber(Signature{}, P, WeightKind::Noncompact) == want);
  CHECK(selberg_total_mass(P, WeightKind::CompactMu) == want);
  auto Q = domain_params(2, 2, 1);
  RatFun want2 = RatFun(4) / ((nu() - 1) * (nu() - 2).pow(2) * (nu() - 3).pow(2) * (nu() - 4));
  CHECK(selberg_total_mass(Q, WeightKind::CompactMu) == want2);
  CHECK(moment_symbolic(Signature{}, Q, WeightKind::CompactMu) == want2);
  CHECK(moment_chamber(Signature{}, Q, WeightKind::CompactMu) == want2);
  // rank one: B(b + 1, nu - p + 1)
  for (int b = 0; b <= 3; ++b) {
    auto R = domain_params(1, 2, b);
    CHECK(selberg_total_mass(R, WeightKind::CompactMu) == RatFun(Rational(fact(b))) / poch_nu(-b - 1, b + 1));
  }
}

TEST_CASE("exact compact moments") {
  CHECK(moment_compact(Signature{1}, domain_params(1, 2, 0), 0, WeightKind::CompactHat) == Rational(1, 2));
  CHECK(moment_compact(Signature{}, domain_params(2, 1, 0), 0, WeightKind::CompactHat) == Rational(1, 3));
  auto P = domain_params(2, 2, 0);
  Rational X = moment_compact(Signature{}, P, 1, WeightKind::CompactHat);
  CHECK(X == compact_hat_oracle(Signature{}, P, 1));
  // int s1 s2 (s1 - s2)^2 = 1/8 - 2/9 + 1/8
  CHECK(X == Rational(1, 36));
  CHECK(std::abs(moment_numeric(Signature{}, P, 1.0, WeightKind::CompactHat) - to_double(X)) <= 1e-10 * to_double(X));
  CHECK_THROWS_AS(moment_compact(Signature{}, P, -1, WeightKind::CompactHat), std::invalid_argument);
  CHECK_THROWS_AS(moment_compact(Signature{}, P, 2, WeightKind::CompactMu), std::domain_error);
  for (int r = 1; r <= 3; ++r)
    for (int a : {2, 4})
      for (int b = 0; b <= 1; ++b) {
        auto Q = domain_params(r, a, b);
        for (int nuv = 0; nuv <= 2; ++nuv)
          for (const auto& s : gen_signatures(3, 2, r)) {
            Rational got = moment_compact(s, Q, nuv, WeightKind::CompactHat);
            CHECK(got == compact_hat_oracle(s, Q, nuv));
            // the symbolic moment evaluated at the integer
            CHECK(moment_chamber(s, Q, WeightKind::CompactHat).eval(nuv) == got);
          }
      }
}

TEST_CASE("rho_Omega") {
  CHECK(rho_omega(domain_params(1, 2, 0)) == 1);
  CHECK(rho_omega(domain_params(1, 2, 3)) == Rational(1, 6));
  CHECK(rho_omega(domain_params(2, 1, 0)) == 1);
  CHECK(rho_omega(domain_params(2, 2, 1)) == Rational(1, 4));
  for (const char* t : {"V", "VI"}) CHECK(sgn(rho_omega(domain_preset(t, {}))) > 0);
}

TEST_CASE("even route equals chamber route") {
  for (int r = 1; r <= 3; ++r)
    for (int a : {2, 4})
      for (int b = 0; b <= 1; ++b) {
        auto P = domain_params(r, a, b);
        if (r == 1 && a == 4) continue;
        for (const auto& s : gen_signatures(r == 3 ? 4 : 6, 6, r))
          for (auto kind : {WeightKind::Noncompact, WeightKind::CompactMu, WeightKind::CompactHat})
            CHECK(moment_even(s, P, kind) == moment_chamber(s, P, kind));
      }
}

TEST_CASE("total mass equals the Selberg product") {
  for (int r = 1; r <= 3; ++r)
    for (int a = 1; a <= 8; ++a)
      for (int b = 0; b <= 3; ++b) {
        if (r == 1 && a != 2) continue;
        auto P = domain_params(r, a, b);
        CHECK(moment_chamber(Signature{}, P, WeightKind::Noncompact) == selberg_total_mass(P, WeightKind::Noncompact));
        CHECK(moment_chamber(Signature{}, P, WeightKind::CompactHat) == selberg_total_mass(P, WeightKind::CompactHat));
      }
}

TEST_CASE("permuted exponent vectors give the same cube integral") {
  for (int a : {1, 3}) {
    auto P = domain_params(3, a, 1);
    std::vector<int> alpha{2, 0, 1};
    RatFun base = moment_cube_monomial(alpha, P, WeightKind::Noncompact);
    std::sort(alpha.begin(), alpha.end());
    do {
      CHECK(moment_cube_monomial(alpha, P, WeightKind::Noncompact) == base);
    } while (std::next_permutation(alpha.begin(), alpha.end()));
    // summing the orbit gives the symmetric moment
    RatFun orbit_sum;
    for (const auto& al : monomial_orbit(Signature{2, 1}, 3)) orbit_sum += moment_cube_monomial(al, P, WeightKind::Noncompact);
    CHECK(orbit_sum == moment_chamber(Signature{2, 1}, P, WeightKind::Noncompact));
  }
}

TEST_CASE("quadrature agrees with exact moments") {
  std::mt19937 rng(17);
  for (int r = 1; r <= 3; ++r)
    for (int a : {1, 2, 3}) {
      if (r == 1 && a != 2) continue;
      auto P = domain_params(r, a, 1);
      for (const auto& s : {Signature{}, Signature{1}, Signature{2, 1}}) {
        if (s.length() > r) continue;
        RatFun exact = moment_symbolic(s, P, WeightKind::Noncompact);
        for (int it = 0; it < 3; ++it) {
          Rational v(static_cast<long>(P.genus() + s.first() + 1) * 4 + static_cast<long>(rng() % 40), 4);
          v.canonicalize();
          double want = to_double(exact.eval(v));
          double got = moment_numeric(s, P, v.get_d(), WeightKind::Noncompact, r == 3 ? 24 : 64);
          CHECK(std::abs(got - want) <= 1e-8 * std::abs(want));
        }
      }
    }
  // example: r = 2, a = 1, b = 0 at nu = 23/2
  auto P = domain_params(2, 1, 0);
  double want = to_double(moment_noncompact(Signature{}, P).eval(Rational(23, 2)));
  CHECK(std::abs(moment_numeric(Signature{}, P, 11.5, WeightKind::Noncompact) - want) <= 1e-8 * want);
  // rank one Beta at nu = 7.25, k = 2: Gamma(3) Gamma(4.25) / Gamma(7.25)
  double beta = std::exp(std::lgamma(3.0) + std::lgamma(4.25) - std::lgamma(7.25));
  CHECK(std::abs(moment_numeric(Signature{2}, domain_params(1, 2, 0), 7.25, WeightKind::Noncompact) - beta) <= 1e-12);
  CHECK_THROWS_AS(moment_numeric(Signature{3}, P, 5.0, WeightKind::Noncompact), std::domain_error);
}

TEST_CASE("linearity against direct integration") {
  std::mt19937 rng(5);
  auto P = domain_params(2, 2, 1);
  SymPoly<Rational> f(2);
  for (const auto& s : gen_signatures(4, 4, 2)) f.add_term(s, Rational(static_cast<int>(rng() % 11) - 5, 1 + rng() % 3));
  for (int nuv = 0; nuv <= 2; ++nuv) {
    // direct: expand f and integrate the whole polynomial once
    Poly g;
    for (const auto& [s, c] : f.terms())
      for (const auto& alpha : monomial_orbit(s, 2)) {
        std::vector<int> e{alpha[0] + P.b, alpha[1] + P.b};
        g[e] += c;
      }
    for (int i = 0; i < 2; ++i)
      for (int k = 0; k < nuv; ++k) g = pmul(g, linear_poly(2, i, 1, -1));
    for (int k = 0; k < P.a; ++k) g = pmul(g, linear_poly(2, 0, 0, 1, 1, -1));
    CHECK(moment_compact_of(f, P, nuv, WeightKind::CompactHat) == cube_integral(g));
    CHECK(moment_of(f, P, WeightKind::CompactHat).eval(nuv) == cube_integral(g));
  }
}

TEST_CASE("term budget") {
  auto P = domain_params(3, 7, 3);
  CHECK_THROWS_AS(moment_chamber(Signature{6, 6, 6}, P, WeightKind::Noncompact, 100), ResourceLimit);
}
