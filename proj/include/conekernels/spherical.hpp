#pragma once

#include "conekernels/domain.hpp"
#include "conekernels/jack.hpp"
#include "conekernels/sympoly.hpp"

namespace conekernels {

// (x)_k for an integer k >= 0.
template <class F>
F pochhammer(const F& x, int k) {
  F acc(1);
  for (int i = 0; i < k; ++i) acc *= x + F(i);
  return acc;
}

// (x)_m = prod_j (x - (j-1)a/2)_{m_j} in rank r.
template <class F>
F pochhammer_gen(const F& x, const Signature& m, int r, const F& a) {
  if (m.length() > r) throw std::invalid_argument("signature longer than rank");
  F acc(1);
  for (int j = 0; j < m.length(); ++j) acc *= pochhammer(F(x - F(j) * a / F(2)), m[j]);
  return acc;
}

// pi_m: ratio of the dimension of P_m to the Pochhammer symbols (d/r)_m/(q_Omega)_m.
template <class F>
F pi_m_generic(const Signature& m, int r, const F& a) {
  F acc(1);
  for (int i = 0; i < r; ++i) {
    for (int j = i + 1; j < r; ++j) {
      int diff = m[i] - m[j];
      F h = F(j - i) * a / F(2);
      acc *= (F(diff) + h) / h;
      acc *= pochhammer(F(F(j - i + 1) * a / F(2)), diff) / pochhammer(F(F(j - i - 1) * a / F(2) + F(1)), diff);
    }
  }
  return acc;
}

// phi_m in r variables: the Jack polynomial with alpha = 2/a normalized to 1 at (1,...,1).
template <class F>
SymPoly<F> spherical_phi_generic(const Signature& m, int r, const F& a) {
  if (m.length() > r) throw std::invalid_argument("signature longer than rank");
  SymPoly<F> P = jack_P(m, F(F(2) / a), r);
  F v = sympoly_at_ones(P);
  return P * (F(1) / v);
}

template <class F>
SymPoly<F> kernel_K_generic(const Signature& m, int r, const F& a) {
  F q = F(r - 1) * a / F(2) + F(1);
  return spherical_phi_generic(m, r, a) * (pi_m_generic(m, r, a) / pochhammer_gen(q, m, r, a));
}

Rational pi_m(const Signature& m, const DomainParams& P);
Rational pochhammer_gen(const Rational& x, const Signature& m, const DomainParams& P);
RatFun pochhammer_gen(const RatFun& x, const Signature& m, const DomainParams& P);
// Dimension of the space of polynomials of signature m.
Integer dim_d_m(const Signature& m, const DomainParams& P);

SymPoly<Rational> spherical_phi(const Signature& m, const DomainParams& P);
// K_m(te, e) in the variables t; cached.
const SymPoly<Rational>& kernel_K(const Signature& m, const DomainParams& P);
// Same polynomial read off from the binomial expansion of prod_j (1 - t_j)^n, r <= 3.
SymPoly<Rational> kernel_K_by_extraction(const Signature& m, const DomainParams& P);

}  // namespace conekernels
