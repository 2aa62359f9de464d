#pragma once

#include <optional>
#include <vector>

#include "conekernels/kernel_lab.hpp"

namespace conekernels {

// sum over m with m_1 <= cap of prod (upper)_m / prod (lower)_m K_m(te, e).
// A constant upper parameter -q caps the sum at q. Parameters are rational
// functions of nu (usually affine). Throws std::domain_error when a lower
// Pochhammer vanishes and std::invalid_argument when the sum does not
// terminate and no cap is given (cap < 0).
SymPoly<RatFun> fk_pfq(const std::vector<RatFun>& upper, const std::vector<RatFun>& lower, const DomainParams& P,
                       int cap = -1);
inline SymPoly<RatFun> fk_2f1(const RatFun& alpha, const RatFun& beta, const RatFun& gamma, const DomainParams& P,
                              int cap = -1) {
  return fk_pfq({alpha, beta}, {gamma}, P, cap);
}
// The same sum evaluated at t = e.
RatFun fk_pfq_at_e(const std::vector<RatFun>& upper, const std::vector<RatFun>& lower, const DomainParams& P,
                   int cap = -1);

// 2F1(-q, beta; gamma; t) against prod (1-t_j)^q 2F1(-q, gamma - beta; gamma; t/(t-1)).
Verdict kummer_check(int q, const RatFun& beta, const RatFun& gamma, const DomainParams& P);

// pi^d c_nu = Gamma_Omega(nu) / Gamma_Omega(nu - d/r), the weighted Bergman
// constant; the true value has pi-grade -1.
RatFun c_nu(const DomainParams& P);
// pi^d times the conjectured constant c^q_nu.
RatFun c_q_nu(const DomainParams& P, int q);
// The conjectured second parameter -b - nu + 2p + q - 2r.
RatFun conjecture_beta(const DomainParams& P, int q);

struct ConjectureOutcome {
  // shape and constant of the conjecture exactly as stated
  Verdict verdict;
  std::optional<Signature> firstDifference;  // first signature where normalized coefficients differ
  RatFun originRatio;                        // S(0, 0) / (c^q_nu 2F1(0))
  // the same comparison after nu -> nu + (r-1)(a-2) in the parameter and constant
  bool reconciledShape = false;
  std::optional<RatFun> reconciledRatio;
};

ConjectureOutcome conjecture_verify(const DomainParams& P, int q);

// int 2F1(-q, beta; p; -x) d rho = 3F2(-q, b + nu - p - q + 2r, d/r; p, nu - q; e) / c_{nu - q}.
Verdict prop_pp_identity(const DomainParams& P, int q);

// Rank one, in the variable s: (q+s)_d P^{(d,s)}_{q-1}(1-2t) as a polynomial in t
// (pi-grade -1).
SymPoly<RatFun> rank1_closed_kernel(int d, int q);

enum class CoefficientFamily {
  Printed,   // d Gamma(s+d+1-l) (s-2l+1) / (l! Gamma(s-l+2))
  Spherical  // the same with d replaced by (d)_l, from the rank-one spherical sum
};
const char* to_string(CoefficientFamily f);
// pi^d c_l(s) in the chosen family, with s symbolic.
RatFun rank1_coefficient(int d, int l, CoefficientFamily fam);
// (1-t)^{q-1} sum_{l<q} c_l(s+2q-2) 2F1(-l, l-s-2q+1; d; t/(t-1)) against the closed kernel.
Verdict rank1_sum_identity(int d, int q, CoefficientFamily fam);

// pi^d d_1(lambda_(j), nu).
Rational rank1_d1(int d, int j, const Rational& nu);
RatFun rank1_d1(int d, int j);  // symbolic nu
// Grammian kernel at numeric nu against sum_j d_1 2F1(-j, d - nu + j; d; -x),
// plus mutual orthogonality of the summands.
Verdict rank1_spherical_sum(int d, const Rational& nu, int mOrder);

}  // namespace conekernels
