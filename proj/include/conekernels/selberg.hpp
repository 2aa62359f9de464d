#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "conekernels/domain.hpp"
#include "conekernels/ratfun.hpp"
#include "conekernels/signature.hpp"
#include "conekernels/sympoly.hpp"

namespace conekernels {

// Raised when an expansion would exceed the configured term budget.
struct ResourceLimit : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Radial weights, all with |Delta|^a:
//   Noncompact  x^b (1+x)^{-nu} on (0,inf)^r  (the moment variable is x)
//   CompactMu   t^b (1-t)^{nu-p} on [0,1]^r
//   CompactHat  t^b (1-t)^{nu}   on [0,1]^r
// None of them carries the constant c_Omega.
enum class WeightKind { Noncompact, CompactMu, CompactHat };

const char* to_string(WeightKind k);

constexpr std::int64_t kDefaultTermBudget = 10'000'000;
constexpr int kDefaultQuadratureNodes = 64;

// sum of coef * prod_k J_k! / prod_{i=0..J_k} (c_k x + n_k + i), reduced
// over a common denominator of linear factors. All c_k > 0, or all zero for a
// purely rational sum.
class BetaProductSum {
 public:
  explicit BetaProductSum(std::vector<int> c);
  void add(const std::vector<long>& n, const std::vector<int>& J, const Integer& coef);
  std::size_t size() const { return terms_.size(); }
  RatFun value() const;

 private:
  std::vector<int> c_;
  std::map<std::vector<long>, Integer> terms_;  // key n_0, J_0, n_1, J_1, ...
};

// Ordered-chamber route, valid for every integer a: flip s = 1 - t, nest
// s_i = u_1...u_i and expand the mixed factors. Symbolic in nu.
RatFun moment_chamber(const Signature& lambda, const DomainParams& P, WeightKind kind,
                      std::int64_t termBudget = kDefaultTermBudget);
// Integral of the single monomial t^alpha (x^alpha for the noncompact weight)
// over the whole cube, summed chamber by chamber over every permutation.
RatFun moment_cube_monomial(const std::vector<int>& alpha, const DomainParams& P, WeightKind kind);
// Expansion of Delta^a into monomials; even a only. Symbolic in nu.
RatFun moment_even(const Signature& lambda, const DomainParams& P, WeightKind kind,
                   std::int64_t termBudget = kDefaultTermBudget);

// Cached symbolic moment; the even route is used when a is even.
RatFun moment_symbolic(const Signature& lambda, const DomainParams& P, WeightKind kind);
inline RatFun moment_noncompact(const Signature& lambda, const DomainParams& P) {
  return moment_symbolic(lambda, P, WeightKind::Noncompact);
}

// Exact moment at an integer nu >= 0 for the compact weights.
Rational moment_compact(const Signature& lambda, const DomainParams& P, long nu, WeightKind kind);

// c_Omega / pi^d.
Rational rho_omega(const DomainParams& P);

// Selberg's product formula for the total mass of the weight, r <= 4.
RatFun selberg_total_mass(const DomainParams& P, WeightKind kind);

// Tensor Gauss-Jacobi quadrature on each ordered chamber. Throws
// std::domain_error when the integral diverges at this nu.
double moment_numeric(const Signature& lambda, const DomainParams& P, double nu, WeightKind kind,
                      int nodes = kDefaultQuadratureNodes);

RatFun moment_of(const SymPoly<Rational>& f, const DomainParams& P, WeightKind kind);
RatFun moment_of(const SymPoly<RatFun>& f, const DomainParams& P, WeightKind kind);
Rational moment_compact_of(const SymPoly<Rational>& f, const DomainParams& P, long nu, WeightKind kind);

}  // namespace conekernels
