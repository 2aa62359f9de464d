#pragma once

#include <map>
#include <vector>

#include "conekernels/hyper_fk.hpp"

namespace conekernels {

// Multivariable Jacobi polynomials on [0,1]^r for t^b (1-t)^nu |Delta|^a dt,
// each monic on its leading m_lambda. The polynomial P_m(u) on [-1,1]^r is the
// member at t = (1-u)/2, so P_m(1) is the member's value at t = 0.
struct JacobiFamily {
  DomainParams params;
  long nu = 0;
  std::vector<Signature> order;  // graded lex
  std::map<Signature, SymPoly<Rational>> members;
  std::map<Signature, Rational> normsOn01;  // without c_Omega
  std::map<Signature, Rational> valuesAtOne;
};

// Gram-Schmidt of the monomial symmetric functions with |lambda| <= maxWeight.
JacobiFamily jacobi_family(const DomainParams& P, long nu, int maxWeight);

// norm^2 on [-1,1]^r equals 2^{d + r nu} times the norm^2 on [0,1]^r. For r <= 2
// the left side is integrated directly over [-1,1]^r.
Verdict interval_scaling_check(const JacobiFamily& fam);

// Kernel at 0 of polynomials of degree < mOrder under c_Omega t^b (1-t)^nu
// |Delta|^a; values carry pi-grade -1.
SymPoly<Rational> shat_kernel(const DomainParams& P, long nu, int mOrder);            // Jacobi expansion
SymPoly<Rational> shat_kernel_grammian(const DomainParams& P, long nu, int mOrder);   // Grammian inverse

// The same kernel in the chart x = t/(1-t): prod (1+x_j)^power times poly(x).
struct CompactOriginKernel {
  int prefactorOnePlusXPower = 0;
  SymPoly<Rational> poly;
  int piGrade = -1;
};
CompactOriginKernel nhat_origin(const DomainParams& P, long nu, int mOrder);

// pi^d times the conjectured constant of the compact case.
RatFun c_hat_q_nu(const DomainParams& P, int q);

// Kernel of span{K_m : m_1 <= q} under c_Omega t^b (1-t)^nu |Delta|^a against
// c_hat 2F1(-q, nu + p + q; p; t); also checks it against the Jacobi expansion
// and the reproducing property.
struct CompactConjectureOutcome {
  Verdict verdict;
  bool jacobiRouteAgrees = false;
  bool reproducing = false;
  std::optional<Signature> firstDifference;
};
CompactConjectureOutcome gg_verify(const DomainParams& P, long nu, int q);

// Rank one. Coefficient of P^{(d-1,nu)}_j(1-2t) in the kernel above: as
// printed, and as obtained from the Grammian kernel by expansion.
Rational rank1_compact_coefficient_printed(int d, long nu, int j);
std::vector<Rational> rank1_compact_coefficients(int d, long nu, int mOrder);
Verdict rank1_compact_coefficient_check(int d, long nu, int mOrder);

// dim V_{nu,m} = (2m+nu+d) (m+nu+1)_{d-1} (m+1)_{d-1} / (d! (d-1)!)
Rational rank1_dimension(int d, long nu, int m);

// sum_{m<=n} d_{nu,m} 2F1(-m, m+d+nu; d; x) against A_n 2F1(-n, n+d+nu+2; d+1; x)
// with the printed A_n, plus the proportionality to the 2F1 orthogonal for
// x (1-x)^nu x^{d-1}; and the kernel-at-zero lemma for that weight.
struct Rank1CompactOutcome {
  Verdict printed;               // the printed closed form
  std::optional<Rational> ratio; // sum / 2F1(-n, n+d+nu+1; d+1; x) when proportional
  Verdict lemma;                 // kernel at 0 is a positive multiple of the next orthogonal family
};
Rank1CompactOutcome rank1_compact_suite(int d, long nu, int n);

}  // namespace conekernels
