#include "conekernels/selberg.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <mutex>
#include <numeric>
#include <tuple>

#include "conekernels/gamma_quotient.hpp"

namespace conekernels {

const char* to_string(WeightKind k) {
  switch (k) {
    case WeightKind::Noncompact:
      return "noncompact";
    case WeightKind::CompactMu:
      return "compactMu";
    case WeightKind::CompactHat:
      return "compactHat";
  }
  return "?";
}

namespace {

using Expansion = std::map<std::vector<int>, Integer>;

Integer factorial(long n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

Integer binomial(long n, long k) {
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return b;
}

// f *= (1 - prod_{k in vars} u_k)^e
void mul_binomial(Expansion& f, const std::vector<int>& vars, int e, std::int64_t& work, std::int64_t budget) {
  if (e == 0) return;
  work += static_cast<std::int64_t>(f.size()) * (e + 1);
  if (work > budget) throw ResourceLimit("moment expansion exceeds the term budget of " + std::to_string(budget));
  Expansion out;
  for (const auto& [mono, c] : f) {
    for (int l = 0; l <= e; ++l) {
      std::vector<int> m = mono;
      for (int k : vars) m[k] += l;
      Integer t = c * binomial(e, l);
      if (l % 2) t = -t;
      auto [it, inserted] = out.try_emplace(std::move(m), t);
      if (!inserted) it->second += t;
    }
  }
  std::erase_if(out, [](const auto& kv) { return sgn(kv.second) == 0; });
  f = std::move(out);
}

// prod_{i<j} (x_i - x_j)^a in r variables.
const Expansion& vandermonde_power(int r, int a) {
  static std::map<std::pair<int, int>, Expansion> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(r, a);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  Expansion f{{std::vector<int>(r, 0), Integer(1)}};
  for (int i = 0; i < r; ++i) {
    for (int j = i + 1; j < r; ++j) {
      Expansion out;
      for (const auto& [mono, c] : f) {
        for (int l = 0; l <= a; ++l) {
          std::vector<int> m = mono;
          m[i] += a - l;
          m[j] += l;
          Integer t = c * binomial(a, l);
          if (l % 2) t = -t;
          auto [jt, inserted] = out.try_emplace(std::move(m), t);
          if (!inserted) jt->second += t;
        }
      }
      std::erase_if(out, [](const auto& kv) { return sgn(kv.second) == 0; });
      f = std::move(out);
    }
  }
  return cache.emplace(key, std::move(f)).first->second;
}

// Offset s in the compact exponent (1 - t)^{nu + s}.
long compact_offset(const DomainParams& P, WeightKind kind) { return kind == WeightKind::CompactHat ? 0 : -P.genus(); }

// Exponent of s_i = 1 - t_i beyond c*nu in the flipped chamber integrand,
// for the monomial exponent alpha_i.
long flipped_offset(const DomainParams& P, WeightKind kind, int alpha_i) {
  switch (kind) {
    case WeightKind::Noncompact:
      return -P.genus() - alpha_i;
    case WeightKind::CompactMu:
      return -P.genus();
    case WeightKind::CompactHat:
      return 0;
  }
  return 0;
}

// Integrand prod_i (1 - s_i)^{A_i} s_i^{c nu + B_i} |Delta(s)|^a on s_1 > ... > s_r,
// after s_i = u_1...u_i: u_k carries u_k^{c (r-k) nu + E0_k} (1 - u_k)^{J_k}
// (0-based k) times the expanded mixed factors.
struct Chamber {
  std::vector<long> E0;
  std::vector<int> J;
  Expansion mixed;
};

Chamber build_chamber(int r, int a, const std::vector<int>& A, const std::vector<long>& B, std::int64_t& work,
                      std::int64_t budget) {
  Chamber ch;
  ch.E0.assign(r, 0);
  ch.J.assign(r, a);
  ch.J[0] = A[0];
  for (int k = 0; k < r; ++k) {
    long e = 0;
    for (int i = k; i < r; ++i) e += B[i];
    e += static_cast<long>(a) * (r - k) * (r - k - 1) / 2 + (r - 1 - k);
    ch.E0[k] = e;
  }
  ch.mixed = Expansion{{std::vector<int>(r, 0), Integer(1)}};
  for (int i = 1; i < r; ++i) {
    std::vector<int> vars(i + 1);
    std::iota(vars.begin(), vars.end(), 0);
    mul_binomial(ch.mixed, vars, A[i], work, budget);
  }
  for (int i = 0; i < r; ++i) {
    for (int j = i + 2; j < r; ++j) {
      std::vector<int> vars;
      for (int k = i + 1; k <= j; ++k) vars.push_back(k);
      mul_binomial(ch.mixed, vars, a, work, budget);
    }
  }
  return ch;
}

// Linear factor c*x + t normalized to primitive form with c >= 0.
struct LinearFactor {
  long c, t;
  auto operator<=>(const LinearFactor&) const = default;
};

}  // namespace

BetaProductSum::BetaProductSum(std::vector<int> c) : c_(std::move(c)) {
  bool any = false, all = true;
  for (int v : c_) {
    if (v < 0) throw std::invalid_argument("BetaProductSum: negative coefficient");
    any = any || v > 0;
    all = all && v > 0;
  }
  if (any && !all) throw std::invalid_argument("BetaProductSum: mixed symbolic and constant variables");
}

void BetaProductSum::add(const std::vector<long>& n, const std::vector<int>& J, const Integer& coef) {
  if (sgn(coef) == 0) return;
  std::vector<long> key(2 * c_.size());
  for (size_t k = 0; k < c_.size(); ++k) {
    key[2 * k] = n[k];
    key[2 * k + 1] = J[k];
  }
  auto [it, inserted] = terms_.try_emplace(std::move(key), coef);
  if (!inserted) {
    it->second += coef;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

RatFun BetaProductSum::value() const {
  const size_t r = c_.size();
  if (terms_.empty()) return RatFun();
  if (c_[0] == 0) {
    Rational acc = 0;
    for (const auto& [key, coef] : terms_) {
      Rational t(coef);
      for (size_t k = 0; k < r; ++k) {
        long n = key[2 * k];
        int J = static_cast<int>(key[2 * k + 1]);
        Integer den = 1;
        for (int i = 0; i <= J; ++i) den *= n + i;
        if (sgn(den) == 0) throw DivisionByZero("Beta integral at a pole");
        t *= Rational(factorial(J)) / Rational(den);
      }
      acc += t;
    }
    acc.canonicalize();
    return RatFun(acc);
  }

  std::vector<long> lo(r, 0), hi(r, 0);
  for (size_t k = 0; k < r; ++k) {
    lo[k] = std::numeric_limits<long>::max();
    hi[k] = std::numeric_limits<long>::min();
  }
  for (const auto& [key, coef] : terms_) {
    for (size_t k = 0; k < r; ++k) {
      lo[k] = std::min(lo[k], key[2 * k]);
      hi[k] = std::max(hi[k], key[2 * k] + key[2 * k + 1]);
    }
  }
  // prefix[k][i] = prod_{t=lo..lo+i-1} (c x + t), suffix[k][i] = prod_{t=lo+i..hi}
  std::vector<std::vector<ZPoly>> prefix(r), suffix(r);
  for (size_t k = 0; k < r; ++k) {
    long len = hi[k] - lo[k] + 1;
    prefix[k].resize(len + 1);
    suffix[k].resize(len + 1);
    prefix[k][0] = ZPoly{Integer(1)};
    for (long i = 0; i < len; ++i) prefix[k][i + 1] = zpoly::mul(prefix[k][i], zpoly::linear(c_[k], lo[k] + i));
    suffix[k][len] = ZPoly{Integer(1)};
    for (long i = len; i-- > 0;) suffix[k][i] = zpoly::mul(suffix[k][i + 1], zpoly::linear(c_[k], lo[k] + i));
  }
  std::map<std::tuple<size_t, long, long>, ZPoly> ncache;
  auto N = [&](size_t k, long n, long J) -> const ZPoly& {
    auto key = std::make_tuple(k, n, J);
    auto it = ncache.find(key);
    if (it != ncache.end()) return it->second;
    ZPoly v = zpoly::mul(prefix[k][n - lo[k]], suffix[k][n + J + 1 - lo[k]]);
    v = zpoly::scale(v, factorial(J));
    return ncache.emplace(key, std::move(v)).first->second;
  };

  std::vector<std::pair<const std::vector<long>*, const Integer*>> items;
  items.reserve(terms_.size());
  for (const auto& [key, coef] : terms_) items.emplace_back(&key, &coef);
  // nested grouping by the leading variables; the map order already groups them
  auto nested = [&](auto&& self, size_t level, size_t b, size_t e) -> ZPoly {
    ZPoly acc;
    size_t i = b;
    while (i < e) {
      const auto& key = *items[i].first;
      long n = key[2 * level], J = key[2 * level + 1];
      size_t j = i + 1;
      while (j < e && (*items[j].first)[2 * level] == n && (*items[j].first)[2 * level + 1] == J) ++j;
      if (level + 1 == r) {
        zpoly::add_scaled(acc, N(level, n, J), *items[i].second);
      } else {
        ZPoly inner = self(self, level + 1, i, j);
        if (!inner.empty()) acc = zpoly::add(acc, zpoly::mul(N(level, n, J), inner));
      }
      i = j;
    }
    return acc;
  };
  ZPoly num = nested(nested, 0, 0, items.size());
  if (num.empty()) return RatFun();

  std::map<LinearFactor, int> factors;
  Integer removed = 1;
  for (size_t k = 0; k < r; ++k) {
    for (long t = lo[k]; t <= hi[k]; ++t) {
      long g = std::gcd(static_cast<long>(c_[k]), std::labs(t));
      removed *= g;
      ++factors[LinearFactor{c_[k] / g, t / g}];
    }
  }
  ZPoly den{Integer(1)};
  for (auto& [f, mult] : factors) {
    ZPoly lin = zpoly::linear(f.c, f.t);
    while (mult > 0 && sgn(zpoly::eval_homogeneous(num, -f.t, f.c)) == 0) {
      num = *zpoly::divexact(num, lin);
      --mult;
    }
    for (int i = 0; i < mult; ++i) den = zpoly::mul(den, lin);
  }
  Rational scale(Integer(1), removed);
  scale.canonicalize();
  return RatFun::from_coprime(scale, std::move(num), std::move(den));
}

namespace {

// Adds coef * (ordered-chamber integral of s^alpha-weight) to the sum.
void add_chamber(BetaProductSum& sum, const std::vector<int>& alpha, const DomainParams& P, WeightKind kind,
                 const Integer& coef, std::int64_t& work, std::int64_t budget) {
  const int r = P.r;
  std::vector<int> A(r);
  std::vector<long> B(r);
  for (int i = 0; i < r; ++i) {
    A[i] = alpha[i] + P.b;
    B[i] = flipped_offset(P, kind, alpha[i]);
  }
  Chamber ch = build_chamber(r, P.a, A, B, work, budget);
  std::vector<long> n(r);
  for (const auto& [e, c] : ch.mixed) {
    for (int k = 0; k < r; ++k) n[k] = ch.E0[k] + e[k] + 1;
    sum.add(n, ch.J, c * coef);
  }
  work += static_cast<std::int64_t>(ch.mixed.size());
  if (work > budget) throw ResourceLimit("moment expansion exceeds the term budget of " + std::to_string(budget));
}

std::vector<int> chamber_coefficients(int r) {
  std::vector<int> c(r);
  for (int k = 0; k < r; ++k) c[k] = r - k;
  return c;
}

}  // namespace

RatFun moment_chamber(const Signature& lambda, const DomainParams& P, WeightKind kind, std::int64_t termBudget) {
  const int r = P.r;
  if (lambda.length() > r) throw std::invalid_argument("signature " + lambda.to_string() + " longer than rank");
  BetaProductSum sum(chamber_coefficients(r));
  std::int64_t work = 0;
  // the cube is r! copies of the chamber once the whole orbit is summed
  const Integer rfact = factorial(r);
  for (const auto& alpha : monomial_orbit(lambda, r)) add_chamber(sum, alpha, P, kind, rfact, work, termBudget);
  return sum.value();
}

RatFun moment_cube_monomial(const std::vector<int>& alpha, const DomainParams& P, WeightKind kind) {
  const int r = P.r;
  if (static_cast<int>(alpha.size()) != r) throw std::invalid_argument("exponent vector must have length r");
  for (int v : alpha)
    if (v < 0) throw std::invalid_argument("negative exponent");
  BetaProductSum sum(chamber_coefficients(r));
  std::int64_t work = 0;
  std::vector<int> perm(r);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<int> beta(r);
    for (int i = 0; i < r; ++i) beta[i] = alpha[perm[i]];
    add_chamber(sum, beta, P, kind, Integer(1), work, kDefaultTermBudget);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum.value();
}

RatFun moment_even(const Signature& lambda, const DomainParams& P, WeightKind kind, std::int64_t termBudget) {
  const int r = P.r;
  if (P.a % 2) throw std::invalid_argument("the monomial expansion route needs an even multiplicity a");
  if (lambda.length() > r) throw std::invalid_argument("signature " + lambda.to_string() + " longer than rank");
  const Expansion& delta = vandermonde_power(r, P.a);
  BetaProductSum sum(std::vector<int>(r, 1));
  std::int64_t work = 0;
  std::vector<long> n(r);
  std::vector<int> J(r);
  const long s = compact_offset(P, kind);
  for (const auto& alpha : monomial_orbit(lambda, r)) {
    work += static_cast<std::int64_t>(delta.size());
    if (work > termBudget) throw ResourceLimit("moment expansion exceeds the term budget of " + std::to_string(termBudget));
    for (const auto& [mono, coef] : delta) {
      for (int k = 0; k < r; ++k) {
        int e = alpha[k] + P.b + mono[k];
        J[k] = e;
        // x^e (1+x)^{-nu}: e!/prod_{i=1..e+1}(nu - i); t^e (1-t)^{nu+s}: e!/prod_{i=1..e+1}(nu + s + i)
        n[k] = kind == WeightKind::Noncompact ? -e - 1 : s + 1;
      }
      sum.add(n, J, coef);
    }
  }
  return sum.value();
}

RatFun moment_symbolic(const Signature& lambda, const DomainParams& P, WeightKind kind) {
  using Key = std::tuple<DomainParams, Signature, int>;
  static std::map<Key, RatFun> cache;
  static std::mutex mu;
  Key key{P, lambda, static_cast<int>(kind)};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  RatFun v = (P.a % 2 == 0) ? moment_even(lambda, P, kind) : moment_chamber(lambda, P, kind);
  std::lock_guard<std::mutex> lock(mu);
  return cache.try_emplace(key, std::move(v)).first->second;
}

Rational moment_compact(const Signature& lambda, const DomainParams& P, long nu, WeightKind kind) {
  if (kind == WeightKind::Noncompact) throw std::invalid_argument("moment_compact needs a compact weight");
  if (nu < 0) throw std::invalid_argument("the exact compact moment needs an integer nu >= 0");
  if (kind == WeightKind::CompactMu && nu < P.genus())
    throw std::domain_error("(1-t)^(nu-p) is not integrable for nu = " + std::to_string(nu));
  const int r = P.r;
  if (lambda.length() > r) throw std::invalid_argument("signature " + lambda.to_string() + " longer than rank");
  using Key = std::tuple<DomainParams, Signature, long, int>;
  static std::map<Key, Rational> cache;
  static std::mutex mu;
  Key key{P, lambda, nu, static_cast<int>(kind)};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  BetaProductSum sum(std::vector<int>(r, 0));
  std::int64_t work = 0;
  const Integer rfact = factorial(r);
  for (const auto& alpha : monomial_orbit(lambda, r)) {
    std::vector<int> A(r);
    std::vector<long> B(r);
    for (int i = 0; i < r; ++i) {
      A[i] = alpha[i] + P.b;
      B[i] = nu + flipped_offset(P, kind, alpha[i]);
    }
    Chamber ch = build_chamber(r, P.a, A, B, work, kDefaultTermBudget);
    std::vector<long> n(r);
    for (const auto& [e, coef] : ch.mixed) {
      for (int k = 0; k < r; ++k) n[k] = ch.E0[k] + e[k] + 1;
      sum.add(n, ch.J, coef * rfact);
    }
  }
  Rational v = sum.value().constant_value();
  std::lock_guard<std::mutex> lock(mu);
  return cache.try_emplace(key, v).first->second;
}

Rational rho_omega(const DomainParams& P) {
  GammaQuotient g;
  for (int j = 0; j < P.r; ++j) g.mul(0, frac(P.a, 2) + 1);
  g.div_gindikin(P.r, P.a, 0, frac(P.r * P.a, 2) + 1);
  g.div_gindikin(P.r, P.a, 0, P.d_over_r());
  auto red = g.reduce();
  if (red.sqrtPiPower != 0) throw IrreducibleGamma("c_Omega/pi^d keeps a power of sqrt(pi)");
  return red.value.constant_value();
}

RatFun selberg_total_mass(const DomainParams& P, WeightKind kind) {
  if (P.r > 4) throw std::invalid_argument("closed-form mass is provided for rank at most 4");
  // int prod t^{al-1} (1-t)^{be-1} |Delta|^{2ga}
  //   = prod_{j<r} G(al + j ga) G(be + j ga) G(1 + (j+1) ga) / (G(al + be + (r+j-1) ga) G(1 + ga))
  const Rational al = P.b + 1, ga = frac(P.a, 2);
  const Rational be0 = compact_offset(P, kind) + 1;  // be = nu + be0
  GammaQuotient g;
  for (int j = 0; j < P.r; ++j) {
    g.mul(0, al + j * ga);
    g.mul(1, be0 + j * ga);
    g.mul(0, 1 + (j + 1) * ga);
    g.div(1, al + be0 + (P.r + j - 1) * ga);
    g.div(0, 1 + ga);
  }
  auto red = g.reduce();
  if (red.sqrtPiPower != 0) throw IrreducibleGamma("Selberg mass keeps a power of sqrt(pi)");
  return red.value;
}

RatFun moment_of(const SymPoly<Rational>& f, const DomainParams& P, WeightKind kind) {
  RatFun acc;
  for (const auto& [s, c] : f.terms()) acc += RatFun(c) * moment_symbolic(s, P, kind);
  return acc;
}

RatFun moment_of(const SymPoly<RatFun>& f, const DomainParams& P, WeightKind kind) {
  RatFun acc;
  for (const auto& [s, c] : f.terms()) acc += c * moment_symbolic(s, P, kind);
  return acc;
}

Rational moment_compact_of(const SymPoly<Rational>& f, const DomainParams& P, long nu, WeightKind kind) {
  Rational acc = 0;
  for (const auto& [s, c] : f.terms()) acc += c * moment_compact(s, P, nu, kind);
  return acc;
}

namespace {

struct GaussRule {
  std::vector<double> x, w;
};

// Gauss rule for u^A (1-u)^B on [0,1] by Golub-Welsch on the Jacobi matrix.
GaussRule gauss_jacobi01(double A, double B, int n) {
  // Jacobi weight (1-x)^al (1+x)^be on [-1,1] with u = (1+x)/2
  const double al = B, be = A;
  Eigen::VectorXd diag(n), off(std::max(n - 1, 1));
  for (int k = 0; k < n; ++k) {
    double s = 2.0 * k + al + be;
    diag(k) = (k == 0) ? (be - al) / (al + be + 2.0) : (be * be - al * al) / (s * (s + 2.0));
  }
  for (int k = 1; k < n; ++k) {
    double s = 2.0 * k + al + be;
    double v = (k == 1) ? 4.0 * (1 + al) * (1 + be) / ((2 + al + be) * (2 + al + be) * (3 + al + be))
                        : 4.0 * k * (k + al) * (k + be) * (k + al + be) / (s * s * (s + 1) * (s - 1));
    off(k - 1) = std::sqrt(v);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, off.head(n - 1), Eigen::ComputeEigenvectors);
  const double mu0 = std::exp(std::lgamma(A + 1) + std::lgamma(B + 1) - std::lgamma(A + B + 2));
  GaussRule g;
  g.x.resize(n);
  g.w.resize(n);
  for (int i = 0; i < n; ++i) {
    g.x[i] = (1.0 + es.eigenvalues()(i)) / 2.0;
    double v = es.eigenvectors()(0, i);
    g.w[i] = mu0 * v * v;
  }
  return g;
}

}  // namespace

double moment_numeric(const Signature& lambda, const DomainParams& P, double nu, WeightKind kind, int nodes) {
  const int r = P.r, a = P.a, p = P.genus();
  if (lambda.length() > r) throw std::invalid_argument("signature " + lambda.to_string() + " longer than rank");
  if (nodes < 2) throw std::invalid_argument("quadrature needs at least two nodes");
  switch (kind) {
    case WeightKind::Noncompact:
      if (!(lambda.first() < nu - p + 1)) throw std::domain_error("moment diverges: need m_1 < nu - p + 1");
      break;
    case WeightKind::CompactMu:
      if (!(nu - p > -1)) throw std::domain_error("weight not integrable: need nu > p - 1");
      break;
    case WeightKind::CompactHat:
      if (!(nu > -1)) throw std::domain_error("weight not integrable: need nu > -1");
      break;
  }
  double rfact = 1;
  for (int i = 2; i <= r; ++i) rfact *= i;
  double total = 0;
  for (const auto& alpha : monomial_orbit(lambda, r)) {
    std::vector<int> A(r);
    std::vector<double> B(r);
    for (int i = 0; i < r; ++i) {
      A[i] = alpha[i] + P.b;
      B[i] = nu + static_cast<double>(flipped_offset(P, kind, alpha[i]));
    }
    std::vector<GaussRule> rules(r);
    for (int k = 0; k < r; ++k) {
      double E = a * (r - k) * (r - k - 1) / 2.0 + (r - 1 - k);
      for (int i = k; i < r; ++i) E += B[i];
      if (!(E > -1)) throw std::domain_error("chamber integral diverges");
      rules[k] = gauss_jacobi01(E, k == 0 ? A[0] : a, nodes);
    }
    // the unexpanded mixed factors evaluated level by level
    std::vector<double> u(r);
    auto rec = [&](auto&& self, int k, double s, double acc) -> double {
      if (k == r) return acc;
      double sum = 0;
      const auto& R = rules[k];
      for (int i = 0; i < nodes; ++i) {
        u[k] = R.x[i];
        double sk = s * u[k];
        double f = acc * R.w[i];
        if (k >= 1 && A[k] > 0) f *= std::pow(1.0 - sk, A[k]);
        for (int i0 = 0; i0 + 2 <= k; ++i0) {
          double prod = 1;
          for (int l = i0 + 1; l <= k; ++l) prod *= u[l];
          f *= std::pow(1.0 - prod, a);
        }
        sum += self(self, k + 1, sk, f);
      }
      return sum;
    };
    total += rec(rec, 0, 1.0, 1.0);
  }
  return rfact * total;
}

}  // namespace conekernels
