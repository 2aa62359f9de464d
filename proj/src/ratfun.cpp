#include "conekernels/ratfun.hpp"

#include <ostream>
#include <regex>
#include <sstream>

namespace conekernels {

namespace {

// Splits a Q-polynomial into content * primitive integer polynomial.
void to_primitive(const std::vector<Rational>& c, Rational& content, ZPoly& prim) {
  Integer l = 1;
  for (const auto& v : c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den().get_mpz_t());
  prim.resize(c.size());
  for (size_t i = 0; i < c.size(); ++i) prim[i] = c[i].get_num() * (l / c[i].get_den());
  zpoly::trim(prim);
  Integer g;
  zpoly::make_primitive(prim, g);
  content = Rational(g, l);
  content.canonicalize();
}

std::vector<Rational> compose_affine(const ZPoly& p, const Rational& c1, const Rational& c0) {
  // Horner: acc = acc*(c1 x + c0) + p_i
  std::vector<Rational> acc;
  for (int i = zpoly::degree(p); i >= 0; --i) {
    std::vector<Rational> next(acc.size() + 1, Rational(0));
    for (size_t j = 0; j < acc.size(); ++j) {
      next[j] += acc[j] * c0;
      next[j + 1] += acc[j] * c1;
    }
    next[0] += p[i];
    while (!next.empty() && sgn(next.back()) == 0) next.pop_back();
    acc = std::move(next);
  }
  return acc;
}

std::string poly_q_string(const std::vector<Rational>& c, const std::string& var) {
  if (c.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
    if (sgn(c[i]) == 0) continue;
    Rational mag = abs(c[i]);
    os << (first ? (sgn(c[i]) < 0 ? "-" : "") : (sgn(c[i]) < 0 ? " - " : " + "));
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

}  // namespace

PolyNu::PolyNu(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  for (auto& v : c_) v.canonicalize();
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

PolyNu PolyNu::constant(const Rational& c) { return PolyNu({c}); }
PolyNu PolyNu::variable() { return PolyNu({Rational(0), Rational(1)}); }

Rational PolyNu::eval(const Rational& v) const {
  Rational acc = 0;
  for (int i = degree(); i >= 0; --i) acc = acc * v + c_[i];
  return acc;
}

RatFun::RatFun(const Rational& v) : scale_(v), num_{Integer(1)}, den_{Integer(1)} { scale_.canonicalize(); }

RatFun::RatFun(const PolyNu& num, const PolyNu& den) {
  if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
  if (num.is_zero()) {
    *this = RatFun();
    return;
  }
  Rational cn, cd;
  ZPoly n, d;
  to_primitive(num.coeffs(), cn, n);
  to_primitive(den.coeffs(), cd, d);
  ZPoly g = zpoly::gcd(n, d);
  if (!zpoly::is_one(g)) {
    n = *zpoly::divexact(n, g);
    d = *zpoly::divexact(d, g);
  }
  *this = from_coprime(cn / cd, std::move(n), std::move(d));
}

RatFun RatFun::variable() { return linear(1, 0); }

RatFun RatFun::linear(const Rational& c1, const Rational& c0) {
  if (sgn(c1) == 0) return RatFun(c0);
  Rational c;
  ZPoly p;
  to_primitive({c0, c1}, c, p);
  return from_coprime(c, std::move(p), {Integer(1)});
}

RatFun RatFun::from_zpoly(const ZPoly& num) {
  if (num.empty()) return RatFun();
  return from_coprime(1, num, {Integer(1)});
}

RatFun RatFun::from_coprime(Rational scale, ZPoly num, ZPoly den) {
  zpoly::trim(num);
  zpoly::trim(den);
  if (den.empty()) throw DivisionByZero("rational function with zero denominator");
  RatFun r;
  if (num.empty() || sgn(scale) == 0) return r;
  Integer cn, cd;
  zpoly::make_primitive(num, cn);
  zpoly::make_primitive(den, cd);
  r.scale_ = scale * Rational(cn, cd);
  r.scale_.canonicalize();
  r.num_ = std::move(num);
  r.den_ = std::move(den);
  if (sgn(r.den_.back()) < 0) {
    for (auto& v : r.den_) v = -v;
    r.scale_ = -r.scale_;
  }
  r.normalize_sign();
  return r;
}

void RatFun::normalize_sign() {
  if (sgn(num_.back()) < 0) {
    for (auto& v : num_) v = -v;
    scale_ = -scale_;
  }
}

Rational RatFun::constant_value() const {
  if (!is_constant()) throw std::logic_error("rational function is not constant");
  return scale_ * num_[0] / den_[0];
}

PolyNu RatFun::numerator() const {
  if (is_zero()) return PolyNu();
  std::vector<Rational> c(num_.size());
  for (size_t i = 0; i < num_.size(); ++i) c[i] = scale_ * num_[i];
  return PolyNu(std::move(c));
}

PolyNu RatFun::denominator() const {
  std::vector<Rational> c(den_.begin(), den_.end());
  return PolyNu(std::move(c));
}

Rational RatFun::eval(const Rational& v) const {
  Rational d = zpoly::eval(den_, v);
  if (sgn(d) == 0) throw DivisionByZero("evaluation at a pole");
  if (is_zero()) return 0;
  return scale_ * zpoly::eval(num_, v) / d;
}

RatFun RatFun::subst_affine(const Rational& c1, const Rational& c0) const {
  if (is_zero() || is_constant()) return *this;
  Rational cn, cd;
  ZPoly n, d;
  to_primitive(compose_affine(num_, c1, c0), cn, n);
  to_primitive(compose_affine(den_, c1, c0), cd, d);
  if (sgn(c1) == 0) return RatFun(scale_ * cn / cd);
  return from_coprime(scale_ * cn / cd, std::move(n), std::move(d));
}

RatFun RatFun::operator-() const {
  RatFun r(*this);
  r.scale_ = -r.scale_;
  return r;
}

RatFun& RatFun::operator+=(const RatFun& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const Integer &p1 = scale_.get_num(), &q1 = scale_.get_den();
  const Integer &p2 = o.scale_.get_num(), &q2 = o.scale_.get_den();
  Integer l;
  mpz_lcm(l.get_mpz_t(), q1.get_mpz_t(), q2.get_mpz_t());
  Integer A = p1 * (l / q1), B = p2 * (l / q2);

  ZPoly N, den;
  if (den_ == o.den_) {
    N = zpoly::scale(num_, A);
    zpoly::add_scaled(N, o.num_, B);
    if (N.empty()) return *this = RatFun();
    Integer c;
    zpoly::make_primitive(N, c);
    den = den_;
    if (!zpoly::is_one(den)) {
      ZPoly g = zpoly::gcd(N, den);
      if (!zpoly::is_one(g)) {
        N = *zpoly::divexact(N, g);
        den = *zpoly::divexact(den, g);
      }
    }
    return *this = from_coprime(Rational(c, l), std::move(N), std::move(den));
  }
  ZPoly g = zpoly::gcd(den_, o.den_);
  ZPoly d1 = zpoly::is_one(g) ? den_ : *zpoly::divexact(den_, g);
  ZPoly d2 = zpoly::is_one(g) ? o.den_ : *zpoly::divexact(o.den_, g);
  N = zpoly::mul(num_, d2);
  N = zpoly::scale(N, A);
  zpoly::add_scaled(N, zpoly::mul(o.num_, d1), B);
  if (N.empty()) return *this = RatFun();
  Integer c;
  zpoly::make_primitive(N, c);
  if (!zpoly::is_one(g)) {
    ZPoly h = zpoly::gcd(N, g);
    if (!zpoly::is_one(h)) {
      N = *zpoly::divexact(N, h);
      g = *zpoly::divexact(g, h);
    }
  }
  den = zpoly::mul(zpoly::mul(d1, d2), g);
  return *this = from_coprime(Rational(c, l), std::move(N), std::move(den));
}

RatFun& RatFun::operator-=(const RatFun& o) { return *this += -o; }

RatFun& RatFun::operator*=(const RatFun& o) {
  if (is_zero() || o.is_zero()) return *this = RatFun();
  if (o.is_constant()) {
    scale_ *= o.scale_;
    return *this;
  }
  if (is_constant()) {
    Rational s = scale_ * o.scale_;
    *this = o;
    scale_ = s;
    return *this;
  }
  ZPoly n1 = num_, d1 = den_, n2 = o.num_, d2 = o.den_;
  if (!zpoly::is_one(d2)) {
    ZPoly g = zpoly::gcd(n1, d2);
    if (!zpoly::is_one(g)) {
      n1 = *zpoly::divexact(n1, g);
      d2 = *zpoly::divexact(d2, g);
    }
  }
  if (!zpoly::is_one(d1)) {
    ZPoly g = zpoly::gcd(n2, d1);
    if (!zpoly::is_one(g)) {
      n2 = *zpoly::divexact(n2, g);
      d1 = *zpoly::divexact(d1, g);
    }
  }
  scale_ *= o.scale_;
  num_ = zpoly::mul(n1, n2);
  den_ = zpoly::mul(d1, d2);
  return *this;
}

RatFun RatFun::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  RatFun r;
  r.scale_ = 1 / scale_;
  r.num_ = den_;
  r.den_ = num_;
  return r;
}

RatFun& RatFun::operator/=(const RatFun& o) { return *this *= o.inverse(); }

RatFun RatFun::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  RatFun r(1), b(*this);
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

std::string RatFun::to_string(const std::string& var) const {
  std::string n = poly_q_string(numerator().coeffs(), var);
  if (is_polynomial()) {
    if (den_[0] == 1) return n;
  }
  std::string d = zpoly::to_string(den_, var);
  bool nsimple = is_zero() || num_.size() == 1;
  return (nsimple ? n : "(" + n + ")") + "/(" + d + ")";
}

std::ostream& operator<<(std::ostream& os, const RatFun& f) { return os << f.to_string(); }

Rational parse_rational(const std::string& s) {
  static const std::regex re(R"(\s*([+-]?\d+)(?:/(\d+))?\s*)");
  std::smatch m;
  if (!std::regex_match(s, m, re)) throw std::invalid_argument("malformed rational: " + s);
  Integer n(m[1].str() == "+" ? "0" : (m[1].str()[0] == '+' ? m[1].str().substr(1) : m[1].str()));
  Integer d = m[2].matched ? Integer(m[2].str()) : Integer(1);
  if (d == 0) throw std::invalid_argument("zero denominator: " + s);
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace conekernels
