#include "conekernels/sympoly.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <tuple>

namespace conekernels {

std::vector<std::vector<int>> monomial_orbit(const Signature& lambda, int r) {
  if (lambda.length() > r) return {};
  std::vector<int> v(r);
  for (int i = 0; i < r; ++i) v[i] = lambda[i];
  std::sort(v.begin(), v.end());
  std::vector<std::vector<int>> out;
  do {
    out.push_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  // descending representative first
  std::reverse(out.begin(), out.end());
  return out;
}

long monomial_at_ones(const Signature& lambda, int r) {
  if (lambda.length() > r) return 0;
  long n = 1;
  for (int i = 2; i <= r; ++i) n *= i;
  for (int m : lambda.multiplicities(r)) {
    long f = 1;
    for (int i = 2; i <= m; ++i) f *= i;
    n /= f;
  }
  return n;
}

const std::vector<std::pair<Signature, long>>& monomial_product(const Signature& lambda, const Signature& mu, int r) {
  using Key = std::tuple<Signature, Signature, int>;
  static std::map<Key, std::vector<std::pair<Signature, long>>> cache;
  static std::mutex mu_cache;
  Key key{std::min(lambda, mu), std::max(lambda, mu), r};
  {
    std::lock_guard<std::mutex> lock(mu_cache);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  std::map<Signature, long> counts;
  // the coefficient of m_nu is the number of pairs from the two orbits whose
  // sum is the non-increasing vector nu
  for (const auto& b : monomial_orbit(mu, r)) {
    for (const auto& a : monomial_orbit(lambda, r)) {
      std::vector<int> s(r);
      bool sorted = true;
      for (int i = 0; i < r; ++i) {
        s[i] = a[i] + b[i];
        if (i > 0 && s[i] > s[i - 1]) sorted = false;
      }
      if (sorted) ++counts[Signature(s)];
    }
  }
  std::vector<std::pair<Signature, long>> out(counts.begin(), counts.end());
  std::lock_guard<std::mutex> lock(mu_cache);
  return cache.try_emplace(key, std::move(out)).first->second;
}

namespace {

std::string coeff_string(const Rational& c) { return c.get_str(); }
std::string coeff_string(const RatFun& c) {
  if (c.is_constant()) return c.constant_value().get_str();
  return "(" + c.to_string() + ")";
}

}  // namespace

template <class F>
std::string sympoly_expanded_string(const SymPoly<F>& f, const std::string& var) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const auto& [s, c] = *it;
    std::string cs = coeff_string(c);
    for (const auto& alpha : monomial_orbit(s, f.nvars())) {
      std::ostringstream mono;
      bool any = false;
      for (size_t i = 0; i < alpha.size(); ++i) {
        if (alpha[i] == 0) continue;
        mono << (any ? "*" : "") << var << (i + 1);
        if (alpha[i] > 1) mono << "^" << alpha[i];
        any = true;
      }
      if (!first) os << " + ";
      first = false;
      if (!any) {
        os << cs;
      } else if (cs == "1") {
        os << mono.str();
      } else {
        os << cs << "*" << mono.str();
      }
    }
  }
  return os.str();
}

template std::string sympoly_expanded_string(const SymPoly<Rational>&, const std::string&);
template std::string sympoly_expanded_string(const SymPoly<RatFun>&, const std::string&);

}  // namespace conekernels
