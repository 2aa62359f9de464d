#include <climits>

#include "conekernels/domain.hpp"
#include "conekernels/jack.hpp"
#include "conekernels/spherical.hpp"
#include "doctest.h"
#include "kernel_tables.hpp"

using namespace conekernels;

namespace {

using SP = SymPoly<Rational>;
using SF = SymPoly<RatFun>;

RatFun A() { return RatFun::variable(); }  // the multiplicity a, symbolic

SP m(int r, Signature s, Rational c = 1) { return SP::monomial(r, s, c); }
SF mf(int r, Signature s, RatFun c) { return SF::monomial(r, s, c); }

}  // namespace

TEST_CASE("domain parameters and presets") {
  auto P = domain_params(2, 2, 1);
  CHECK(P.genus() == 5);
  CHECK(P.dim() == 6);
  CHECK(domain_preset("V", {}).genus() == 12);
  CHECK(domain_preset("V", {}).dim() == 16);
  CHECK(domain_preset("VI", {}).genus() == 18);
  CHECK(domain_preset("VI", {}).dim() == 27);
  CHECK(domain_preset("I", {2, 3}) == P);
  auto II = domain_preset("II", {3});
  CHECK(II.genus() == 4);
  CHECK(II.dim() == 6);
  auto III = domain_preset("III", {7});
  CHECK(III.genus() == 12);
  CHECK(III.dim() == 21);
  auto IV = domain_preset("IV", {6});
  CHECK(IV.genus() == 6);
  CHECK(IV.dim() == 6);
  auto ball = domain_params(1, 5, 2);
  CHECK(ball.a == 2);
  CHECK(ball.dim() == 3);
  CHECK(ball.genus() == 4);
  CHECK_THROWS_AS(domain_params(0, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(domain_params(2, 1, -1), std::invalid_argument);
  CHECK_THROWS_AS(domain_params(2, 0, 0), std::invalid_argument);
}

TEST_CASE("signature enumeration order") {
  auto s = gen_signatures(INT_MAX / 2, 2, 3);
  std::vector<Signature> want{{}, {1}, {1, 1}, {1, 1, 1}, {2}, {2, 1}, {2, 1, 1}, {2, 2}, {2, 2, 1}, {2, 2, 2}};
  CHECK(s == want);
  CHECK(gen_signatures(1, 3, 2) == std::vector<Signature>{{}, {1}});
  CHECK(gen_signatures(0, 0, 4) == std::vector<Signature>{{}});
  CHECK(partitions(4).size() == 5);
  CHECK(partitions(8).size() == 22);
  CHECK(parse_signature("(2,1)") == Signature{2, 1});
  CHECK(parse_signature("0") == Signature{});
  CHECK_THROWS(parse_signature("1,2"));
}

TEST_CASE("symmetric polynomial arithmetic") {
  CHECK(m(2, {1}) * m(2, {1}) == m(2, {2}) + m(2, {1, 1}, 2));
  CHECK(sympoly_eval(m(3, {1, 1}), {1, 1, 1}) == 3);
  CHECK(negate_vars(m(2, {1}) + m(2, {1, 1})) == m(2, {1}, -1) + m(2, {1, 1}));
  // (t1 + t2 + t3)^3 in three variables
  SP e1 = m(3, {1});
  CHECK(e1 * e1 * e1 == m(3, {3}) + m(3, {2, 1}, 3) + m(3, {1, 1, 1}, 6));
  CHECK(sympoly_eval(e1 * e1 * e1, {1, 2, 3}) == 216);
  CHECK_THROWS_AS(m(2, {1, 1, 1}), std::invalid_argument);
}

TEST_CASE("jack polynomials: small cases") {
  RatFun al = RatFun::variable();
  CHECK(jack_P(Signature{1}, al, 4) == mf(4, {1}, 1));
  CHECK(jack_P(Signature{1, 1}, al, 4) == mf(4, {1, 1}, 1));
  // P_(2) = m_2 + 2 alpha/(alpha + 1) m_11, from orthogonality to m_11 by hand
  CHECK(jack_P(Signature{2}, al, 4) == mf(4, {2}, 1) + mf(4, {1, 1}, RatFun(2) / (al + 1)));
  // at alpha = 1 these are Schur functions; coefficients are Kostka numbers
  CHECK(jack_P(Signature{2, 1}, Rational(1), 4) == m(4, {2, 1}) + m(4, {1, 1, 1}, 2));
  CHECK(jack_P(Signature{3, 1}, Rational(1), 4) ==
        m(4, {3, 1}) + m(4, {2, 2}) + m(4, {2, 1, 1}, 2) + m(4, {1, 1, 1, 1}, 3));
  CHECK(jack_P(Signature{2, 2}, Rational(1), 4) == m(4, {2, 2}) + m(4, {2, 1, 1}) + m(4, {1, 1, 1, 1}, 2));
  // restriction to fewer variables drops long partitions
  CHECK(jack_P(Signature{1, 1, 1}, Rational(2), 2).is_zero());
}

TEST_CASE("jack polynomials: triangularity and orthogonality") {
  for (Rational alpha : {Rational(2), Rational(1), Rational(2, 3), Rational(1, 4)}) {
    for (int n = 1; n <= 8; ++n) {
      JackTable<Rational> T(n, alpha);
      const auto& P = T.partitions();
      for (size_t i = 0; i < P.size(); ++i) {
        const auto& c = T.monomial_coeffs(P[i]);
        CHECK(c[i] == 1);
        for (size_t j = 0; j < P.size(); ++j)
          if (j != i && !dominated_by(P[j], P[i])) CHECK(sgn(c[j]) == 0);
        for (size_t j = 0; j < i; ++j) CHECK(sgn(T.pairing(P[i], P[j])) == 0);
      }
    }
  }
}

TEST_CASE("jack polynomials: symbolic alpha, degree <= 6") {
  // the full degree-8 check runs in the acceptance binary
  RatFun al = RatFun::variable();
  for (int n = 1; n <= 6; ++n) {
    JackTable<RatFun> T(n, al);
    const auto& P = T.partitions();
    for (size_t i = 0; i < P.size(); ++i) {
      const auto& c = T.monomial_coeffs(P[i]);
      for (size_t j = 0; j < P.size(); ++j)
        if (j != i && !dominated_by(P[j], P[i])) CHECK(c[j].is_zero());
      for (size_t j = 0; j < i; ++j) CHECK(T.pairing(P[i], P[j]).is_zero());
    }
  }
}

TEST_CASE("jack polynomials: recursion agrees with Gram-Schmidt") {
  for (Rational alpha : {Rational(2), Rational(1, 2), Rational(2, 3)}) {
    for (int n = 1; n <= 8; ++n) {
      JackTable<Rational> T(n, alpha);
      const auto& P = T.partitions();
      for (const auto& lam : P) {
        const auto& c = T.monomial_coeffs(lam);
        SymPoly<Rational> want(n);
        for (size_t j = 0; j < P.size(); ++j) want.add_term(P[j], c[j]);
        CHECK(jack_P(lam, alpha, n) == want);
      }
    }
  }
  RatFun al = RatFun::variable();
  for (int n = 1; n <= 5; ++n) {
    JackTable<RatFun> T(n, al);
    const auto& P = T.partitions();
    for (const auto& lam : P) {
      const auto& c = T.monomial_coeffs(lam);
      SymPoly<RatFun> want(3);
      for (size_t j = 0; j < P.size(); ++j)
        if (P[j].length() <= 3) want.add_term(P[j], c[j]);
      CHECK(jack_P(lam, al, 3) == want);
    }
  }
}

TEST_CASE("J-normalized value at (1,...,1)") {
  // J_m = prod over boxes (alpha*arm + leg + 1) * P_m and J_m(1^r) = (2/a)^|m| (ra/2)_m
  for (int r = 1; r <= 3; ++r) {
    for (int a : {1, 2, 3, 4, 8}) {
      DomainParams Pm{r, r == 1 ? 2 : a, 0};
      Rational alpha = frac(2, Pm.a);
      for (const auto& s : gen_signatures(6, 4, r)) {
        Rational hook = 1;
        for (int i = 0; i < s.length(); ++i) {
          for (int j = 0; j < s[i]; ++j) {
            int arm = s[i] - j - 1, leg = 0;
            for (int k = i + 1; k < s.length() && s[k] > j; ++k) ++leg;
            hook *= alpha * arm + leg + 1;
          }
        }
        Rational J1 = hook * sympoly_at_ones(jack_P(s, alpha, r));
        Rational want = pochhammer_gen(frac(r * Pm.a, 2), s, Pm);
        for (int k = 0; k < s.weight(); ++k) want *= alpha;
        CHECK(J1 == want);
      }
    }
  }
}

TEST_CASE("generalized Pochhammer, pi_m and dimensions") {
  auto P = domain_params(2, 2, 0);
  CHECK(pochhammer_gen(Rational(7), Signature{}, P) == 1);
  CHECK(pochhammer_gen(Rational(-1), Signature{1, 1}, P) == 2);
  RatFun nu = RatFun::variable();
  auto P3 = domain_params(2, 3, 0);
  CHECK(pochhammer_gen(nu, Signature{1, 1}, P3) == nu * (nu - RatFun(Rational(3, 2))));
  CHECK(pi_m_generic<RatFun>(Signature{1}, 2, A()) == A() + 2);
  CHECK(pi_m(Signature{}, P3) == 1);
  // integral on the actual domains
  std::vector<DomainParams> domains{domain_preset("V", {}), domain_preset("VI", {})};
  for (int n = 2; n <= 4; ++n) domains.push_back(domain_preset("II", {n}));
  for (int m = 4; m <= 7; ++m) domains.push_back(domain_preset("III", {m}));
  for (int n = 3; n <= 6; ++n) domains.push_back(domain_preset("IV", {n}));
  for (int m = 1; m <= 3; ++m)
    for (int n = m; n <= 4; ++n) domains.push_back(domain_preset("I", {m, n}));
  for (const auto& Q : domains) {
    CHECK(dim_d_m(Signature{1}, Q) == Q.dim());
    for (const auto& s : gen_signatures(6, 4, Q.r)) CHECK(dim_d_m(s, Q) > 0);
  }
  // the ball: homogeneous polynomials of degree k in d variables
  auto ball = domain_params(1, 2, 3);
  CHECK(dim_d_m(Signature{3}, ball) == 20);
}

TEST_CASE("rank-2 kernels with symbolic multiplicity") {
  for (const auto& e : tables::rank2_kernels()) CHECK(kernel_K_generic<RatFun>(e.m, 2, A()) == e.want);
}

TEST_CASE("rank-3 spherical polynomials with symbolic multiplicity") {
  for (const auto& e : tables::rank3_spherical()) CHECK(spherical_phi_generic<RatFun>(e.m, 3, A()) == e.want);
}

TEST_CASE("spherical polynomial invariants") {
  for (int r = 1; r <= 3; ++r) {
    for (int a : {1, 2, 3, 4, 8}) {
      auto P = domain_params(r, a, 0);
      for (const auto& s : gen_signatures(5, 5, r)) {
        SP phi = spherical_phi(s, P);
        CHECK(sympoly_at_ones(phi) == 1);
        if (s.weight() + r <= 5 + r) {
          SP shifted = spherical_phi(s.shifted(r), P);
          CHECK(shifted == phi * m(r, Signature(std::vector<int>(r, 1))));
        }
        const SP& K = kernel_K(s, P);
        CHECK(negate_vars(K) == K * Rational(s.weight() % 2 ? -1 : 1));
        CHECK(K.degree() == s.weight());
      }
    }
  }
}

TEST_CASE("kernels: extraction route equals Jack route") {
  for (int r = 1; r <= 3; ++r)
    for (int a : {1, 2, 3, 4, 8}) {
      auto P = domain_params(r, a, 0);
      for (const auto& s : gen_signatures(INT_MAX / 2, r == 3 ? 3 : 4, r))
        CHECK_MESSAGE(kernel_K_by_extraction(s, P) == kernel_K(s, P), "r=", r, " a=", a, " m=", s.to_string());
    }
  CHECK_THROWS_AS(kernel_K_by_extraction(Signature{1}, domain_params(4, 2, 0)), std::invalid_argument);
}

TEST_CASE("binomial identity prod (1 - t_j)^n") {
  for (int r = 1; r <= 3; ++r)
    for (int a : {1, 2, 5}) {
      auto P = domain_params(r, a, 1);
      for (int n = 0; n <= (r == 3 ? 4 : 5); ++n) {
        // prod_j (1 - t_j) = sum_k (-1)^k e_k
        SP e(r);
        for (int j = 0; j <= r; ++j) e.add_term(Signature(std::vector<int>(j, 1)), j % 2 ? -1 : 1);
        SP lhs = m(r, {}, 1);
        for (int k = 0; k < n; ++k) lhs = lhs * e;
        SP rhs(r);
        for (const auto& s : gen_signatures(r * n, n, r)) rhs += kernel_K(s, P) * pochhammer_gen(Rational(-n), s, P);
        CHECK(lhs == rhs);
      }
    }
}
