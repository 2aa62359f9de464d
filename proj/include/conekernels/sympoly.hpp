#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "conekernels/ratfun.hpp"
#include "conekernels/signature.hpp"

namespace conekernels {

// Distinct permutations of the signature padded with zeros to length r.
std::vector<std::vector<int>> monomial_orbit(const Signature& lambda, int r);
// m_lambda(1,...,1) in r variables.
long monomial_at_ones(const Signature& lambda, int r);
// m_lambda * m_mu = sum count * m_nu in r variables (cached, thread-safe).
const std::vector<std::pair<Signature, long>>& monomial_product(const Signature& lambda, const Signature& mu, int r);

// Symmetric polynomial in r variables over the field F, in the monomial
// symmetric basis.
template <class F>
class SymPoly {
 public:
  SymPoly() = default;
  explicit SymPoly(int nvars) : nvars_(nvars) {}

  static SymPoly monomial(int nvars, const Signature& s, const F& c = F(1)) {
    SymPoly p(nvars);
    p.add_term(s, c);
    return p;
  }
  static SymPoly constant(int nvars, const F& c) { return monomial(nvars, Signature(), c); }

  int nvars() const { return nvars_; }
  const std::map<Signature, F>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  F coeff(const Signature& s) const {
    auto it = terms_.find(s);
    return it == terms_.end() ? F(0) : it->second;
  }
  int degree() const {
    int d = -1;
    for (const auto& [s, c] : terms_) d = std::max(d, s.weight());
    return d;
  }
  int max_part() const {
    int d = 0;
    for (const auto& [s, c] : terms_) d = std::max(d, s.first());
    return d;
  }

  void add_term(const Signature& s, const F& c) {
    if (s.length() > nvars_) throw std::invalid_argument("signature " + s.to_string() + " exceeds variable count");
    if (is_zero_value(c)) return;
    auto [it, inserted] = terms_.try_emplace(s, c);
    if (!inserted) {
      it->second += c;
      if (is_zero_value(it->second)) terms_.erase(it);
    }
  }

  SymPoly& operator+=(const SymPoly& o) {
    check(o);
    for (const auto& [s, c] : o.terms_) add_term(s, c);
    return *this;
  }
  SymPoly& operator-=(const SymPoly& o) {
    check(o);
    for (const auto& [s, c] : o.terms_) add_term(s, -c);
    return *this;
  }
  SymPoly& operator*=(const F& c) {
    if (is_zero_value(c)) {
      terms_.clear();
      return *this;
    }
    for (auto& [s, v] : terms_) v *= c;
    return *this;
  }
  friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
  friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
  friend SymPoly operator*(SymPoly a, const F& c) { return a *= c; }
  friend SymPoly operator*(const SymPoly& a, const SymPoly& b) {
    a.check(b);
    SymPoly out(a.nvars_);
    for (const auto& [s, c] : a.terms_) {
      for (const auto& [t, d] : b.terms_) {
        F cd = c * d;
        for (const auto& [u, k] : monomial_product(s, t, a.nvars_)) out.add_term(u, cd * F(k));
      }
    }
    return out;
  }
  friend bool operator==(const SymPoly& a, const SymPoly& b) { return a.nvars_ == b.nvars_ && a.terms_ == b.terms_; }

  template <class G, class Fn>
  SymPoly<G> map_coeffs(Fn fn) const {
    SymPoly<G> out(nvars_);
    for (const auto& [s, c] : terms_) out.add_term(s, fn(c));
    return out;
  }

 private:
  static bool is_zero_value(const F& c) { return conekernels::is_zero(c); }
  void check(const SymPoly& o) const {
    if (o.nvars_ != nvars_) throw std::invalid_argument("SymPoly variable count mismatch");
  }
  int nvars_ = 0;
  std::map<Signature, F> terms_;
};

template <class F>
F sympoly_eval(const SymPoly<F>& f, const std::vector<F>& point) {
  if (static_cast<int>(point.size()) != f.nvars()) throw std::invalid_argument("evaluation point has wrong length");
  F acc(0);
  for (const auto& [s, c] : f.terms()) {
    F m(0);
    for (const auto& alpha : monomial_orbit(s, f.nvars())) {
      F t(1);
      for (size_t i = 0; i < alpha.size(); ++i)
        for (int e = 0; e < alpha[i]; ++e) t *= point[i];
      m += t;
    }
    acc += c * m;
  }
  return acc;
}

// f(-t_1, ..., -t_r)
template <class F>
SymPoly<F> negate_vars(const SymPoly<F>& f) {
  SymPoly<F> out(f.nvars());
  for (const auto& [s, c] : f.terms()) out.add_term(s, (s.weight() % 2) ? F(-c) : c);
  return out;
}

// Value at t = (1, ..., 1).
template <class F>
F sympoly_at_ones(const SymPoly<F>& f) {
  F acc(0);
  for (const auto& [s, c] : f.terms()) acc += c * F(monomial_at_ones(s, f.nvars()));
  return acc;
}

inline SymPoly<RatFun> to_ratfun(const SymPoly<Rational>& f) {
  return f.map_coeffs<RatFun>([](const Rational& c) { return RatFun(c); });
}

// Expanded form in the variables t1..tr, for display.
template <class F>
std::string sympoly_expanded_string(const SymPoly<F>& f, const std::string& var = "t");

}  // namespace conekernels
