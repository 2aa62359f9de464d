#pragma once

#include <map>
#include <vector>

#include "conekernels/ratfun.hpp"
#include "conekernels/signature.hpp"
#include "conekernels/sympoly.hpp"

namespace conekernels {

// Coefficient of m_lambda in the power sum p_mu (cached).
long power_to_monomial(const Signature& mu, const Signature& lambda);

// z_mu = prod_i i^{k_i} k_i!
Integer z_factor(const Signature& mu);

// Jack P-polynomials of all partitions of n, built by Gram-Schmidt of the
// monomial basis (increasing order) under <p_mu, p_nu> = delta z_mu alpha^l(mu).
template <class F>
class JackTable {
 public:
  JackTable(int n, const F& alpha);

  int n() const { return n_; }
  const std::vector<Signature>& partitions() const { return parts_; }
  // coefficients in the monomial basis, indexed like partitions()
  const std::vector<F>& monomial_coeffs(const Signature& lambda) const;
  // <P_lambda, P_mu> from the power-sum coordinates
  F pairing(const Signature& lambda, const Signature& mu) const;

 private:
  size_t index(const Signature& lambda) const;
  int n_;
  std::vector<Signature> parts_;
  std::vector<F> weights_;              // z_mu alpha^l(mu)
  std::vector<std::vector<F>> pcoords_;  // P_lambda in the power-sum basis
  std::vector<std::vector<F>> mcoords_;  // P_lambda in the monomial basis
};

// P_lambda in nvars variables, from the eigen-operator recursion over the
// dominance down-set. Independent of JackTable, which serves as a cross-check.
template <class F>
SymPoly<F> jack_P(const Signature& lambda, const F& alpha, int nvars);

}  // namespace conekernels
