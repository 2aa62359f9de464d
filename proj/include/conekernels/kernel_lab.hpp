#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "conekernels/domain.hpp"
#include "conekernels/linear_solve.hpp"
#include "conekernels/selberg.hpp"
#include "conekernels/signature.hpp"
#include "conekernels/sympoly.hpp"
#include "conekernels/verdict.hpp"

namespace conekernels {

// The admissible basis is empty: nu <= p - 1 leaves no square-integrable
// polynomial.
struct NontrivialityFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class BasisMode { Truncation, Stabilized };

// Which span of K_m(te, e) the kernel reproduces. Truncation takes |m| < mOrder
// and, when nu is numeric, m_1 < (nu - p + 1)/2; stabilized takes m_1 <= q.
// An empty nu means nu is kept symbolic.
struct KernelSpaceSpec {
  DomainParams params;
  BasisMode mode = BasisMode::Stabilized;
  int mOrder = 1;
  int q = 0;
  std::optional<Rational> nu;

  static KernelSpaceSpec stabilized(const DomainParams& P, int q, std::optional<Rational> nu = std::nullopt);
  static KernelSpaceSpec truncation(const DomainParams& P, int mOrder, std::optional<Rational> nu = std::nullopt);

  std::map<std::string, std::string> describe() const;
};

std::vector<Signature> basis_admissible(const KernelSpaceSpec& spec);

// entries[i][j] = rho_Omega * int K_i K_j x^b (1+x)^{-nu} |Delta|^a; the true
// Gram matrix is pi^d times this.
struct GramMatrix {
  std::vector<Signature> basis;
  Matrix<RatFun> entries;
  int piGrade = 1;
};

GramMatrix gram_matrix(const KernelSpaceSpec& spec);

// S(x, 0) in the cone coordinate x; the true kernel is pi^{-d} times value.
struct KernelAtOrigin {
  SymPoly<RatFun> value;
  int piGrade = -1;
  KernelSpaceSpec spec;
};

KernelAtOrigin repker_S(const KernelSpaceSpec& spec);

// Reproducing kernel at 0 of the span of arbitrary symmetric polynomials
// under c_Omega times the given weight, nu symbolic or fixed. Uses U(0) from
// the constant terms of the basis.
SymPoly<RatFun> grammian_kernel(const std::vector<SymPoly<RatFun>>& basis, const DomainParams& P, WeightKind kind,
                                const std::optional<Rational>& nu);

// prod_j (1 - t_j)^power * poly(t), the form a kernel takes in the compact
// coordinate t = x/(1+x).
struct OriginKernel {
  int prefactorOneMinusTPower = 0;
  SymPoly<RatFun> poly;
  int piGrade = -1;
};

OriginKernel repker_N_origin(const KernelSpaceSpec& spec);
// P^m at the origin: prod (1-t_j)^{m-1} times N^m at nu + 2m - 2.
OriginKernel repker_P_origin(const KernelSpaceSpec& spec, int m);

Verdict reproducing_property_check(const KernelSpaceSpec& spec);
// Needs 2q - 1 < nu - p <= 2q + 1; compares truncation rq+1 with rq+1+r.
Verdict stabilization_check(const DomainParams& P, int q, const Rational& nu);

enum class Nontriviality { Trivial, ProperlyBigger, EqualToLower };
const char* to_string(Nontriviality n);
Nontriviality nontriviality(const DomainParams& P, int mOrder, const Rational& nu);

// lhs / rhs when the two are proportional over Q(nu), otherwise nullopt.
// Both zero gives nullopt as well.
std::optional<RatFun> proportionality(const SymPoly<RatFun>& lhs, const SymPoly<RatFun>& rhs);

// prod_j (1 - t_j)^M f(t/(1-t)), a polynomial once M >= max part of f.
template <class F>
SymPoly<F> moebius_clear(const SymPoly<F>& f, int M);

extern template SymPoly<Rational> moebius_clear(const SymPoly<Rational>&, int);
extern template SymPoly<RatFun> moebius_clear(const SymPoly<RatFun>&, int);

}  // namespace conekernels
