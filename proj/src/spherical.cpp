#include "conekernels/spherical.hpp"

#include <memory>
#include <mutex>

namespace conekernels {

Rational pi_m(const Signature& m, const DomainParams& P) { return pi_m_generic<Rational>(m, P.r, Rational(P.a)); }

Rational pochhammer_gen(const Rational& x, const Signature& m, const DomainParams& P) {
  return pochhammer_gen<Rational>(x, m, P.r, Rational(P.a));
}

RatFun pochhammer_gen(const RatFun& x, const Signature& m, const DomainParams& P) {
  return pochhammer_gen<RatFun>(x, m, P.r, RatFun(P.a));
}

Integer dim_d_m(const Signature& m, const DomainParams& P) {
  Rational v = pochhammer_gen(P.d_over_r(), m, P) * pi_m(m, P) / pochhammer_gen(P.q_omega(), m, P);
  if (v.get_den() != 1) throw std::logic_error("non-integral dimension for " + m.to_string());
  return v.get_num();
}

SymPoly<Rational> spherical_phi(const Signature& m, const DomainParams& P) {
  return spherical_phi_generic<Rational>(m, P.r, Rational(P.a));
}

const SymPoly<Rational>& kernel_K(const Signature& m, const DomainParams& P) {
  using Key = std::pair<DomainParams, Signature>;
  static std::map<Key, std::unique_ptr<SymPoly<Rational>>> cache;
  static std::mutex mu;
  Key key{P, m};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
  }
  auto K = std::make_unique<SymPoly<Rational>>(kernel_K_generic<Rational>(m, P.r, Rational(P.a)));
  std::lock_guard<std::mutex> lock(mu);
  return *cache.try_emplace(key, std::move(K)).first->second;
}

SymPoly<Rational> kernel_K_by_extraction(const Signature& m, const DomainParams& P) {
  const int r = P.r;
  if (r > 3) throw std::invalid_argument("extraction route is implemented for rank at most 3");
  if (m.length() > r) throw std::invalid_argument("signature longer than rank");
  const Rational q = P.q_omega();
  std::map<Signature, SymPoly<Rational>> known;
  for (int n = 0; n <= m.first(); ++n) {
    // homogeneous components of prod_j (1 - t_j)^n
    std::map<int, SymPoly<Rational>> target;
    for (const auto& s : gen_signatures(r * n, n, r)) {
      Rational c = 1;
      for (int j = 0; j < r; ++j) {
        Integer b;
        mpz_bin_uiui(b.get_mpz_t(), n, s[j]);
        c *= b;
      }
      if (s.weight() % 2) c = -c;
      target.try_emplace(s.weight(), SymPoly<Rational>(r)).first->second.add_term(s, c);
    }
    // rank 3: signatures with m_3 >= 1 come from the shift identity
    if (r == 3 && n >= 1) {
      for (const auto& s : gen_signatures(3 * n, n, 3)) {
        if (s.first() != n || s.length() < 3) continue;
        Signature low = s.unshifted(3);
        const auto& Klow = known.at(low);
        Rational f = pi_m(s, P) / pochhammer_gen(q, s, P) * pochhammer_gen(q, low, P) / pi_m(low, P);
        SymPoly<Rational> K(3);
        for (const auto& [t, c] : Klow.terms()) K.add_term(t.shifted(3), c * f);
        known.emplace(s, std::move(K));
      }
    }
    for (auto& [deg, poly] : target) {
      SymPoly<Rational> rest = poly;
      std::vector<Signature> unknown;
      for (const auto& s : gen_signatures(deg, n, r)) {
        if (s.weight() != deg) continue;
        auto it = known.find(s);
        if (it != known.end()) {
          rest -= it->second * pochhammer_gen(Rational(-n), s, P);
        } else if (s.first() == n) {
          unknown.push_back(s);
        } else {
          throw std::logic_error("extraction: missing lower kernel " + s.to_string());
        }
      }
      if (unknown.size() > 1) throw std::logic_error("extraction: more than one unknown in a degree");
      if (unknown.empty()) {
        if (!rest.is_zero()) throw std::logic_error("extraction: inconsistent homogeneous component");
        continue;
      }
      known.emplace(unknown[0], rest * (Rational(1) / pochhammer_gen(Rational(-n), unknown[0], P)));
    }
  }
  return known.at(m);
}

}  // namespace conekernels
