#include "conekernels/jack.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <string>

namespace conekernels {

namespace {

// p_k * m_nu as a combination of monomials: add k to one distinct part value
// of nu (zero included); the coefficient is the multiplicity of the new part.
std::map<Signature, long> times_power(int k, const std::map<Signature, long>& f) {
  std::map<Signature, long> out;
  for (const auto& [nu, c] : f) {
    std::vector<int> parts = nu.parts();
    parts.push_back(0);
    for (size_t i = 0; i < parts.size(); ++i) {
      if (i > 0 && parts[i] == parts[i - 1]) continue;
      std::vector<int> q = parts;
      q[i] += k;
      std::sort(q.begin(), q.end(), std::greater<>());
      while (!q.empty() && q.back() == 0) q.pop_back();
      long mult = std::count(q.begin(), q.end(), parts[i] + k);
      out[Signature(std::move(q))] += c * mult;
    }
  }
  return out;
}

const std::map<Signature, long>& power_expansion(const Signature& mu) {
  static std::map<Signature, std::map<Signature, long>> cache;
  static std::recursive_mutex m;
  std::lock_guard<std::recursive_mutex> lock(m);
  auto it = cache.find(mu);
  if (it != cache.end()) return it->second;
  std::map<Signature, long> f;
  if (mu.length() == 0) {
    f[Signature()] = 1;
  } else {
    std::vector<int> rest(mu.parts().begin() + 1, mu.parts().end());
    f = times_power(mu.first(), power_expansion(Signature(std::move(rest))));
  }
  return cache.emplace(mu, std::move(f)).first->second;
}

}  // namespace

long power_to_monomial(const Signature& mu, const Signature& lambda) {
  if (mu.weight() != lambda.weight()) return 0;
  const auto& f = power_expansion(mu);
  auto it = f.find(lambda);
  return it == f.end() ? 0 : it->second;
}

Integer z_factor(const Signature& mu) {
  Integer z = 1;
  const auto& p = mu.parts();
  size_t i = 0;
  while (i < p.size()) {
    size_t j = i;
    while (j < p.size() && p[j] == p[i]) ++j;
    long k = static_cast<long>(j - i);
    for (long t = 0; t < k; ++t) z *= p[i];
    for (long t = 2; t <= k; ++t) z *= t;
    i = j;
  }
  return z;
}

template <class F>
JackTable<F>::JackTable(int n, const F& alpha) : n_(n), parts_(conekernels::partitions(n)) {
  size_t N = parts_.size();
  // R[mu][lambda] = coefficient of m_lambda in p_mu, upper triangular
  std::vector<std::vector<Rational>> R(N, std::vector<Rational>(N));
  for (size_t i = 0; i < N; ++i)
    for (size_t j = i; j < N; ++j) R[i][j] = power_to_monomial(parts_[i], parts_[j]);
  // inverse of an upper triangular matrix, column by column
  std::vector<std::vector<Rational>> Rinv(N, std::vector<Rational>(N));
  for (size_t c = 0; c < N; ++c) {
    for (size_t ii = c + 1; ii-- > 0;) {
      Rational s = (ii == c) ? Rational(1) : Rational(0);
      for (size_t k = ii + 1; k <= c; ++k) s -= R[ii][k] * Rinv[k][c];
      Rinv[ii][c] = s / R[ii][ii];
    }
  }
  weights_.resize(N);
  for (size_t i = 0; i < N; ++i) {
    F w = F(Rational(z_factor(parts_[i])));
    for (int k = 0; k < parts_[i].length(); ++k) w *= alpha;
    weights_[i] = w;
  }
  auto inner = [&](const std::vector<F>& u, const std::vector<F>& v) {
    F acc(0);
    for (size_t k = 0; k < N; ++k)
      if (!is_zero(u[k]) && !is_zero(v[k])) acc += u[k] * v[k] * weights_[k];
    return acc;
  };
  // m_lambda = sum_mu Rinv[lambda][mu] p_mu
  pcoords_.resize(N);
  mcoords_.resize(N);
  std::vector<F> norms(N);
  for (size_t l = 0; l < N; ++l) {
    std::vector<F> v(N), m(N, F(0));
    for (size_t k = 0; k < N; ++k) v[k] = F(Rinv[l][k]);
    m[l] = F(1);
    std::vector<F> base = v;
    for (size_t k = 0; k < l; ++k) {
      F c = inner(base, pcoords_[k]);
      if (is_zero(c)) continue;
      c /= norms[k];
      for (size_t t = 0; t < N; ++t) {
        if (!is_zero(pcoords_[k][t])) v[t] -= c * pcoords_[k][t];
        if (!is_zero(mcoords_[k][t])) m[t] -= c * mcoords_[k][t];
      }
    }
    norms[l] = inner(v, v);
    pcoords_[l] = std::move(v);
    mcoords_[l] = std::move(m);
  }
}

template <class F>
size_t JackTable<F>::index(const Signature& lambda) const {
  for (size_t i = 0; i < parts_.size(); ++i)
    if (parts_[i] == lambda) return i;
  throw std::invalid_argument("partition " + lambda.to_string() + " not of weight " + std::to_string(n_));
}

template <class F>
const std::vector<F>& JackTable<F>::monomial_coeffs(const Signature& lambda) const {
  return mcoords_[index(lambda)];
}

template <class F>
F JackTable<F>::pairing(const Signature& lambda, const Signature& mu) const {
  const auto& u = pcoords_[index(lambda)];
  const auto& v = pcoords_[index(mu)];
  F acc(0);
  for (size_t k = 0; k < parts_.size(); ++k)
    if (!is_zero(u[k]) && !is_zero(v[k])) acc += u[k] * v[k] * weights_[k];
  return acc;
}

template <class F>
SymPoly<F> jack_P(const Signature& lambda, const F& alpha, int nvars) {
  // Eigenvector recursion of the Laplace-Beltrami type operator: with
  // rho(mu) = sum_i mu_i (alpha (mu_i - 1) - 2 (i - 1)),
  // (rho(lambda) - rho(mu)) c_mu = 2 sum (mu_i - mu_j + 2t) c_nu over all
  // nu = mu + t(e_i - e_j), i < j, 1 <= t <= mu_j, nu <= lambda in dominance.
  SymPoly<F> out(nvars);
  if (lambda.length() > nvars) return out;
  auto rho = [&](const Signature& mu) {
    F acc(0);
    for (int i = 0; i < mu.length(); ++i) acc += F(mu[i]) * (alpha * F(mu[i] - 1) - F(2 * i));
    return acc;
  };
  std::vector<Signature> down;
  for (const auto& mu : partitions(lambda.weight()))
    if (mu.length() <= nvars && dominated_by(mu, lambda)) down.push_back(mu);
  // dominance refines to the reverse lexicographic order, so walk downward
  std::map<Signature, F> c;
  const F rl = rho(lambda);
  for (auto it = down.rbegin(); it != down.rend(); ++it) {
    const Signature& mu = *it;
    if (mu == lambda) {
      c.emplace(mu, F(1));
      continue;
    }
    F acc(0);
    const auto& p = mu.parts();
    for (size_t i = 0; i < p.size(); ++i) {
      for (size_t j = i + 1; j < p.size(); ++j) {
        // repeated values give the same nu; count each pair of positions once
        for (int t = 1; t <= p[j]; ++t) {
          std::vector<int> q = p;
          q[i] += t;
          q[j] -= t;
          std::sort(q.begin(), q.end(), std::greater<>());
          while (!q.empty() && q.back() == 0) q.pop_back();
          auto f = c.find(Signature(std::move(q)));
          if (f == c.end() || is_zero(f->second)) continue;
          acc += F(p[i] - p[j] + 2 * t) * f->second;
        }
      }
    }
    if (!is_zero(acc)) c.emplace(mu, F(2) * acc / (rl - rho(mu)));
  }
  for (auto& [mu, v] : c) out.add_term(mu, v);
  return out;
}

template class JackTable<Rational>;
template class JackTable<RatFun>;
template SymPoly<Rational> jack_P(const Signature&, const Rational&, int);
template SymPoly<RatFun> jack_P(const Signature&, const RatFun&, int);

}  // namespace conekernels
