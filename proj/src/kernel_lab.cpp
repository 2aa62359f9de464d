#include "conekernels/kernel_lab.hpp"

#include <algorithm>

#include "conekernels/spherical.hpp"

namespace conekernels {

namespace {

Integer binomial(long n, long k) {
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return b;
}

bool graded_less(const Signature& x, const Signature& y) {
  if (x.weight() != y.weight()) return x.weight() < y.weight();
  return x < y;
}

// 2 m_1 < nu - p + 1: K_m is square integrable against the noncompact weight.
bool square_integrable(const Signature& m, const DomainParams& P, const Rational& nu) {
  return Rational(2 * m.first()) < nu - P.genus() + 1;
}

RatFun at(const RatFun& f, const std::optional<Rational>& nu) {
  if (!nu) return f;
  return RatFun(f.eval(*nu));
}

std::vector<RatFun> solve(const Matrix<RatFun>& G, const std::vector<RatFun>& rhs, bool numeric) {
  if (!numeric) return linear_solve_exact(G, rhs);
  Matrix<Rational> M(G.size());
  for (size_t i = 0; i < G.size(); ++i)
    for (const auto& e : G[i]) M[i].push_back(e.constant_value());
  std::vector<Rational> v;
  for (const auto& e : rhs) v.push_back(e.constant_value());
  std::vector<RatFun> out;
  for (const auto& x : linear_solve_exact(M, v)) out.emplace_back(x);
  return out;
}

}  // namespace

KernelSpaceSpec KernelSpaceSpec::stabilized(const DomainParams& P, int q, std::optional<Rational> nu) {
  if (q < 0) throw std::invalid_argument("q must be >= 0");
  KernelSpaceSpec s;
  s.params = P;
  s.mode = BasisMode::Stabilized;
  s.q = q;
  s.nu = std::move(nu);
  return s;
}

KernelSpaceSpec KernelSpaceSpec::truncation(const DomainParams& P, int mOrder, std::optional<Rational> nu) {
  if (mOrder < 1) throw std::invalid_argument("mOrder must be >= 1");
  KernelSpaceSpec s;
  s.params = P;
  s.mode = BasisMode::Truncation;
  s.mOrder = mOrder;
  s.nu = std::move(nu);
  return s;
}

std::map<std::string, std::string> KernelSpaceSpec::describe() const {
  std::map<std::string, std::string> out{{"r", std::to_string(params.r)},
                                         {"a", std::to_string(params.a)},
                                         {"b", std::to_string(params.b)},
                                         {"nu", nu ? to_string(*nu) : "symbolic"}};
  if (mode == BasisMode::Stabilized) {
    out["mode"] = "stabilized";
    out["q"] = std::to_string(q);
  } else {
    out["mode"] = "truncation";
    out["mOrder"] = std::to_string(mOrder);
  }
  return out;
}

std::vector<Signature> basis_admissible(const KernelSpaceSpec& spec) {
  const DomainParams& P = spec.params;
  std::vector<Signature> out;
  if (spec.mode == BasisMode::Stabilized) {
    out = gen_signatures(P.r * spec.q, spec.q, P.r);
  } else {
    if (spec.nu && *spec.nu <= P.genus() - 1)
      throw NontrivialityFailure("nu = " + to_string(*spec.nu) + " <= p - 1 leaves no admissible signature");
    for (const auto& m : gen_signatures(spec.mOrder - 1, spec.mOrder - 1, P.r))
      if (!spec.nu || square_integrable(m, P, *spec.nu)) out.push_back(m);
  }
  if (out.empty()) throw NontrivialityFailure("empty admissible basis");
  std::sort(out.begin(), out.end(), graded_less);
  return out;
}

GramMatrix gram_matrix(const KernelSpaceSpec& spec) {
  const DomainParams& P = spec.params;
  GramMatrix G;
  G.basis = basis_admissible(spec);
  if (spec.nu)
    for (const auto& m : G.basis)
      if (!square_integrable(m, P, *spec.nu))
        throw std::domain_error("K_" + m.to_string() + " is not square integrable at nu = " + to_string(*spec.nu));
  const size_t n = G.basis.size();
  const RatFun rho(rho_omega(P));
  G.entries.assign(n, std::vector<RatFun>(n));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i; j < n; ++j) {
      SymPoly<Rational> prod = kernel_K(G.basis[i], P) * kernel_K(G.basis[j], P);
      RatFun e = at(rho * moment_of(prod, P, WeightKind::Noncompact), spec.nu);
      G.entries[i][j] = e;
      G.entries[j][i] = e;
    }
  }
  return G;
}

KernelAtOrigin repker_S(const KernelSpaceSpec& spec) {
  GramMatrix G = gram_matrix(spec);
  const size_t n = G.basis.size();
  // every K_m with |m| > 0 vanishes at 0 and the basis starts with K_0 = 1
  std::vector<RatFun> u0(n, RatFun(0));
  u0[0] = RatFun(1);
  std::vector<RatFun> c = solve(G.entries, u0, spec.nu.has_value());
  KernelAtOrigin out{SymPoly<RatFun>(spec.params.r), -1, spec};
  for (size_t i = 0; i < n; ++i) out.value += to_ratfun(kernel_K(G.basis[i], spec.params)) * c[i];
  return out;
}

SymPoly<RatFun> grammian_kernel(const std::vector<SymPoly<RatFun>>& basis, const DomainParams& P, WeightKind kind,
                                const std::optional<Rational>& nu) {
  const size_t n = basis.size();
  if (n == 0) throw NontrivialityFailure("empty basis");
  const RatFun rho(rho_omega(P));
  Matrix<RatFun> G(n, std::vector<RatFun>(n));
  std::vector<RatFun> u0;
  for (size_t i = 0; i < n; ++i) {
    u0.push_back(at(basis[i].coeff(Signature()), nu));
    for (size_t j = i; j < n; ++j) {
      RatFun e = at(rho * moment_of(basis[i] * basis[j], P, kind), nu);
      G[i][j] = e;
      G[j][i] = e;
    }
  }
  std::vector<RatFun> c = solve(G, u0, nu.has_value());
  SymPoly<RatFun> out(P.r);
  for (size_t i = 0; i < n; ++i) {
    SymPoly<RatFun> bi = nu ? basis[i].map_coeffs<RatFun>([&](const RatFun& x) { return at(x, nu); }) : basis[i];
    out += bi * c[i];
  }
  return out;
}

template <class F>
SymPoly<F> moebius_clear(const SymPoly<F>& f, int M) {
  const int r = f.nvars();
  if (f.max_part() > M) throw std::invalid_argument("moebius_clear: exponent below the largest part");
  SymPoly<F> out(r);
  // the result is symmetric: read off the coefficient of t^gamma for each
  // partition gamma with parts <= M
  for (const auto& gamma : gen_signatures(r * M, M, r)) {
    F acc(0);
    for (const auto& [lambda, c] : f.terms()) {
      Integer sum = 0;
      for (const auto& alpha : monomial_orbit(lambda, r)) {
        Integer term = 1;
        for (int i = 0; i < r && sgn(term) != 0; ++i) {
          int k = gamma[i] - alpha[i];
          if (k < 0) {
            term = 0;
            break;
          }
          term *= binomial(M - alpha[i], k);
          if (k % 2) term = -term;
        }
        sum += term;
      }
      if (sgn(sum) != 0) acc += c * F(Rational(sum));
    }
    out.add_term(gamma, acc);
  }
  return out;
}

template SymPoly<Rational> moebius_clear(const SymPoly<Rational>&, int);
template SymPoly<RatFun> moebius_clear(const SymPoly<RatFun>&, int);

OriginKernel repker_N_origin(const KernelSpaceSpec& spec) {
  KernelAtOrigin S = repker_S(spec);
  const int M = S.value.max_part();
  return OriginKernel{-M, moebius_clear(S.value, M), S.piGrade};
}

OriginKernel repker_P_origin(const KernelSpaceSpec& spec, int m) {
  if (m < 1) throw std::invalid_argument("P^m needs m >= 1");
  KernelSpaceSpec shifted = spec;
  if (spec.nu) shifted.nu = *spec.nu + 2 * (m - 1);
  OriginKernel N = repker_N_origin(shifted);
  if (!spec.nu)
    N.poly = N.poly.template map_coeffs<RatFun>([&](const RatFun& c) { return c.subst_affine(1, 2 * (m - 1)); });
  N.prefactorOneMinusTPower += m - 1;
  return N;
}

Verdict reproducing_property_check(const KernelSpaceSpec& spec) {
  Verdict v;
  v.cell = spec.describe();
  v.cell["check"] = "reproducing";
  KernelAtOrigin S = repker_S(spec);
  const DomainParams& P = spec.params;
  const RatFun rho(rho_omega(P));
  bool ok = true;
  for (const auto& m : basis_admissible(spec)) {
    RatFun lhs = at(rho * moment_of(to_ratfun(kernel_K(m, P)) * S.value, P, WeightKind::Noncompact), spec.nu);
    RatFun want = m.weight() == 0 ? RatFun(1) : RatFun(0);
    if (!(lhs == want)) {
      ok = false;
      v.note("int K_" + m.to_string() + " S = " + lhs.to_string());
    }
  }
  v.set(ok);
  return v;
}

Verdict stabilization_check(const DomainParams& P, int q, const Rational& nu) {
  Rational gap = nu - P.genus();
  if (!(gap > 2 * q - 1 && gap <= 2 * q + 1))
    throw std::invalid_argument("stabilization needs 2q - 1 < nu - p <= 2q + 1");
  Verdict v;
  v.cell = {{"r", std::to_string(P.r)}, {"a", std::to_string(P.a)}, {"b", std::to_string(P.b)},
            {"q", std::to_string(q)},   {"nu", to_string(nu)},      {"check", "stabilization"}};
  const int m0 = P.r * q + 1;
  auto low = KernelSpaceSpec::truncation(P, m0, nu);
  auto high = KernelSpaceSpec::truncation(P, m0 + P.r, nu);
  bool sameBasis = basis_admissible(low) == basis_admissible(high) &&
                   basis_admissible(low) == basis_admissible(KernelSpaceSpec::stabilized(P, q, nu));
  if (!sameBasis) v.note("admissible bases differ");
  bool same = repker_S(low).value == repker_S(high).value;
  if (!same) v.note("kernels for m = " + std::to_string(m0) + " and " + std::to_string(m0 + P.r) + " differ");
  v.set(same && sameBasis);
  return v;
}

const char* to_string(Nontriviality n) {
  switch (n) {
    case Nontriviality::Trivial:
      return "trivial";
    case Nontriviality::ProperlyBigger:
      return "properlyBigger";
    case Nontriviality::EqualToLower:
      return "equalToLower";
  }
  return "?";
}

Nontriviality nontriviality(const DomainParams& P, int mOrder, const Rational& nu) {
  if (nu <= P.genus() - 1 || mOrder < 1) return Nontriviality::Trivial;
  for (const auto& m : gen_signatures(mOrder - 1, mOrder - 1, P.r))
    if (m.weight() == mOrder - 1 && square_integrable(m, P, nu)) return Nontriviality::ProperlyBigger;
  return Nontriviality::EqualToLower;
}

std::optional<RatFun> proportionality(const SymPoly<RatFun>& lhs, const SymPoly<RatFun>& rhs) {
  if (lhs.is_zero() || rhs.is_zero() || lhs.terms().size() != rhs.terms().size()) return std::nullopt;
  std::optional<RatFun> ratio;
  for (const auto& [s, c] : lhs.terms()) {
    RatFun d = rhs.coeff(s);
    if (d.is_zero()) return std::nullopt;
    RatFun q = c / d;
    if (ratio && !(*ratio == q)) return std::nullopt;
    ratio = q;
  }
  return ratio;
}

}  // namespace conekernels
