#include "conekernels/zpoly.hpp"

#include <algorithm>
#include <cstdint>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace conekernels::zpoly {

void trim(ZPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

int degree(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }
bool is_zero(const ZPoly& p) { return p.empty(); }
bool is_one(const ZPoly& p) { return p.size() == 1 && p[0] == 1; }

const Integer& lead(const ZPoly& p) {
  if (p.empty()) throw std::logic_error("lead of zero polynomial");
  return p.back();
}

ZPoly add(const ZPoly& x, const ZPoly& y) {
  ZPoly r(std::max(x.size(), y.size()));
  for (size_t i = 0; i < x.size(); ++i) r[i] = x[i];
  for (size_t i = 0; i < y.size(); ++i) r[i] += y[i];
  trim(r);
  return r;
}

ZPoly sub(const ZPoly& x, const ZPoly& y) {
  ZPoly r(std::max(x.size(), y.size()));
  for (size_t i = 0; i < x.size(); ++i) r[i] = x[i];
  for (size_t i = 0; i < y.size(); ++i) r[i] -= y[i];
  trim(r);
  return r;
}

ZPoly mul(const ZPoly& x, const ZPoly& y) {
  if (x.empty() || y.empty()) return {};
  ZPoly r(x.size() + y.size() - 1);
  for (size_t i = 0; i < x.size(); ++i) {
    if (sgn(x[i]) == 0) continue;
    for (size_t j = 0; j < y.size(); ++j) mpz_addmul(r[i + j].get_mpz_t(), x[i].get_mpz_t(), y[j].get_mpz_t());
  }
  trim(r);
  return r;
}

ZPoly scale(const ZPoly& x, const Integer& c) {
  if (sgn(c) == 0) return {};
  ZPoly r(x);
  for (auto& v : r) v *= c;
  return r;
}

void add_scaled(ZPoly& acc, const ZPoly& x, const Integer& c) {
  if (sgn(c) == 0 || x.empty()) return;
  if (acc.size() < x.size()) acc.resize(x.size());
  for (size_t i = 0; i < x.size(); ++i) mpz_addmul(acc[i].get_mpz_t(), x[i].get_mpz_t(), c.get_mpz_t());
  trim(acc);
}

ZPoly linear(const Integer& c1, const Integer& c0) {
  ZPoly r{c0, c1};
  trim(r);
  return r;
}

Integer content(const ZPoly& p) {
  Integer g = 0;
  for (const auto& v : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

ZPoly primitive(const ZPoly& p) {
  ZPoly r(p);
  Integer c;
  make_primitive(r, c);
  return r;
}

void make_primitive(ZPoly& p, Integer& removed) {
  removed = content(p);
  if (removed == 0 || removed == 1) {
    if (removed == 0) removed = 1;
    return;
  }
  for (auto& v : p) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), removed.get_mpz_t());
}

std::optional<ZPoly> divexact(const ZPoly& x, const ZPoly& y) {
  if (y.empty()) throw std::domain_error("polynomial division by zero");
  if (x.empty()) return ZPoly{};
  int dx = degree(x), dy = degree(y);
  if (dx < dy) return std::nullopt;
  if (dy == 0) {
    ZPoly q(x);
    for (auto& v : q) {
      if (!mpz_divisible_p(v.get_mpz_t(), y[0].get_mpz_t())) return std::nullopt;
      mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), y[0].get_mpz_t());
    }
    return q;
  }
  ZPoly rem(x);
  ZPoly q(dx - dy + 1);
  const Integer& ly = y.back();
  for (int i = dx - dy; i >= 0; --i) {
    Integer& top = rem[i + dy];
    if (sgn(top) == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), ly.get_mpz_t())) return std::nullopt;
    mpz_divexact(q[i].get_mpz_t(), top.get_mpz_t(), ly.get_mpz_t());
    for (int j = 0; j <= dy; ++j) mpz_submul(rem[i + j].get_mpz_t(), q[i].get_mpz_t(), y[j].get_mpz_t());
  }
  for (int i = 0; i < dy; ++i)
    if (sgn(rem[i]) != 0) return std::nullopt;
  trim(q);
  return q;
}

// ---- modular gcd ----

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool comp = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        comp = false;
        break;
      }
    }
    if (comp) return false;
  }
  return true;
}

// Primes just below 2^62, generated lazily.
u64 nth_prime(size_t i) {
  static std::vector<u64> primes;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  u64 cand = primes.empty() ? (u64{1} << 62) - 1 : primes.back() - 2;
  while (primes.size() <= i) {
    while (!is_prime(cand)) cand -= 2;
    primes.push_back(cand);
    cand -= 2;
  }
  return primes[i];
}

using Mod = std::vector<u64>;

Mod reduce(const ZPoly& x, u64 p) {
  Mod r(x.size());
  for (size_t i = 0; i < x.size(); ++i) r[i] = mpz_fdiv_ui(x[i].get_mpz_t(), p);
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

// Monic gcd over F_p.
Mod gcd_mod(Mod a, Mod b, u64 p) {
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    u64 inv = invmod(b.back(), p);
    int db = static_cast<int>(b.size()) - 1;
    while (a.size() >= b.size()) {
      u64 f = mulmod(a.back(), inv, p);
      int shift = static_cast<int>(a.size()) - 1 - db;
      for (int j = 0; j <= db; ++j) {
        u64 t = mulmod(f, b[j], p);
        u64& tgt = a[j + shift];
        tgt = tgt >= t ? tgt - t : tgt + p - t;
      }
      while (!a.empty() && a.back() == 0) a.pop_back();
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  if (!a.empty()) {
    u64 inv = invmod(a.back(), p);
    for (auto& v : a) v = mulmod(v, inv, p);
  }
  return a;
}

}  // namespace

ZPoly gcd(const ZPoly& x, const ZPoly& y) {
  if (x.empty() && y.empty()) return {};
  if (x.empty()) {
    ZPoly r = primitive(y);
    if (sgn(r.back()) < 0) r = scale(r, -1);
    return r;
  }
  if (y.empty()) return gcd(y, x);
  if (degree(x) == 0 || degree(y) == 0) return {Integer(1)};

  ZPoly a = primitive(x), b = primitive(y);
  if (a == b) {
    if (sgn(a.back()) < 0) a = scale(a, -1);
    return a;
  }
  Integer gamma;
  mpz_gcd(gamma.get_mpz_t(), a.back().get_mpz_t(), b.back().get_mpz_t());

  int bestDeg = std::min(degree(a), degree(b)) + 1;
  ZPoly h;        // CRT image in [0, modulus)
  Integer modulus;
  ZPoly lastSym;  // previous symmetric image, for stabilization
  for (size_t pi = 0;; ++pi) {
    u64 p = nth_prime(pi);
    if (mpz_fdiv_ui(a.back().get_mpz_t(), p) == 0 || mpz_fdiv_ui(b.back().get_mpz_t(), p) == 0) continue;
    Mod g = gcd_mod(reduce(a, p), reduce(b, p), p);
    int dg = static_cast<int>(g.size()) - 1;
    if (dg == 0) return {Integer(1)};
    if (dg > bestDeg) continue;
    u64 gm = mpz_fdiv_ui(gamma.get_mpz_t(), p);
    for (auto& v : g) v = mulmod(v, gm, p);
    if (dg < bestDeg) {
      bestDeg = dg;
      h.assign(g.size(), Integer(0));
      for (size_t i = 0; i < g.size(); ++i) mpz_set_ui(h[i].get_mpz_t(), g[i]);
      mpz_set_ui(modulus.get_mpz_t(), p);
      lastSym.clear();
      continue;
    }
    // combine h (mod modulus) with g (mod p)
    u64 minv = invmod(mpz_fdiv_ui(modulus.get_mpz_t(), p), p);
    for (size_t i = 0; i < h.size(); ++i) {
      u64 hi = mpz_fdiv_ui(h[i].get_mpz_t(), p);
      u64 diff = g[i] >= hi ? g[i] - hi : g[i] + p - hi;
      u64 t = mulmod(diff, minv, p);
      mpz_addmul_ui(h[i].get_mpz_t(), modulus.get_mpz_t(), t);
    }
    mpz_mul_ui(modulus.get_mpz_t(), modulus.get_mpz_t(), p);
    Integer half = modulus / 2;
    ZPoly sym(h);
    for (auto& v : sym)
      if (v > half) v -= modulus;
    if (sym == lastSym) {
      ZPoly cand = primitive(sym);
      if (sgn(cand.back()) < 0) cand = scale(cand, -1);
      if (divexact(a, cand) && divexact(b, cand)) return cand;
    }
    lastSym = std::move(sym);
  }
}

Integer eval_homogeneous(const ZPoly& x, const Integer& num, const Integer& den) {
  if (x.empty()) return 0;
  // Horner in homogeneous form: sum a_i num^i den^(n-i)
  Integer acc = x.back();
  Integer dpow = 1;
  for (int i = degree(x) - 1; i >= 0; --i) {
    acc *= num;
    dpow *= den;
    acc += x[i] * dpow;
  }
  return acc;
}

Rational eval(const ZPoly& x, const Rational& v) {
  if (x.empty()) return 0;
  Integer n = eval_homogeneous(x, v.get_num(), v.get_den());
  Integer d;
  mpz_pow_ui(d.get_mpz_t(), v.get_den().get_mpz_t(), degree(x));
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const ZPoly& p, const std::string& var) {
  if (p.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(p); i >= 0; --i) {
    const Integer& c = p[i];
    if (sgn(c) == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

}  // namespace conekernels::zpoly
