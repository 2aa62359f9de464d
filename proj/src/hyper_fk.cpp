#include "conekernels/hyper_fk.hpp"

#include <algorithm>

#include "conekernels/gamma_quotient.hpp"
#include "conekernels/spherical.hpp"

namespace conekernels {

namespace {

RatFun nu_var() { return RatFun::variable(); }

RatFun reduce_exact(const GammaQuotient& g) {
  auto red = g.reduce();
  if (red.sqrtPiPower != 0) throw IrreducibleGamma("a power of sqrt(pi) survives the reduction");
  return red.value;
}

int terminating_cap(const std::vector<RatFun>& upper) {
  int cap = -1;
  for (const auto& u : upper) {
    if (!u.is_constant()) continue;
    Rational v = u.constant_value();
    if (v.get_den() == 1 && sgn(v) <= 0) {
      int q = static_cast<int>(-v.get_num().get_si());
      cap = cap < 0 ? q : std::min(cap, q);
    }
  }
  return cap;
}

std::vector<std::pair<Signature, RatFun>> fk_terms(const std::vector<RatFun>& upper, const std::vector<RatFun>& lower,
                                                    const DomainParams& P, int cap) {
  int t = terminating_cap(upper);
  if (t >= 0) cap = cap < 0 ? t : std::min(cap, t);
  if (cap < 0) throw std::invalid_argument("non-terminating hypergeometric series needs an explicit cap");
  std::vector<std::pair<Signature, RatFun>> out;
  for (const auto& m : gen_signatures(P.r * cap, cap, P.r)) {
    RatFun c(1);
    for (const auto& u : upper) c *= pochhammer_gen(u, m, P);
    if (c.is_zero()) continue;
    for (const auto& l : lower) {
      RatFun d = pochhammer_gen(l, m, P);
      if (d.is_zero()) throw std::domain_error("lower Pochhammer symbol vanishes at m = " + m.to_string());
      c /= d;
    }
    out.emplace_back(m, c);
  }
  return out;
}

// leading coefficients normalized by the constant term
std::optional<Signature> first_difference(const SymPoly<RatFun>& lhs, const SymPoly<RatFun>& rhs) {
  RatFun l0 = lhs.coeff(Signature()), r0 = rhs.coeff(Signature());
  std::vector<Signature> keys;
  for (const auto& [s, c] : lhs.terms()) keys.push_back(s);
  for (const auto& [s, c] : rhs.terms()) keys.push_back(s);
  std::sort(keys.begin(), keys.end(), [](const Signature& x, const Signature& y) {
    return x.weight() != y.weight() ? x.weight() < y.weight() : x < y;
  });
  for (const auto& s : keys) {
    if (l0.is_zero() || r0.is_zero()) return s;
    if (!(lhs.coeff(s) / l0 == rhs.coeff(s) / r0)) return s;
  }
  return std::nullopt;
}

std::map<std::string, std::string> cell_of(const DomainParams& P, int q, const std::string& check) {
  return {{"r", std::to_string(P.r)},
          {"a", std::to_string(P.a)},
          {"b", std::to_string(P.b)},
          {"q", std::to_string(q)},
          {"nu", "symbolic"},
          {"check", check}};
}

}  // namespace

SymPoly<RatFun> fk_pfq(const std::vector<RatFun>& upper, const std::vector<RatFun>& lower, const DomainParams& P,
                       int cap) {
  SymPoly<RatFun> out(P.r);
  for (const auto& [m, c] : fk_terms(upper, lower, P, cap)) out += to_ratfun(kernel_K(m, P)) * c;
  return out;
}

RatFun fk_pfq_at_e(const std::vector<RatFun>& upper, const std::vector<RatFun>& lower, const DomainParams& P, int cap) {
  RatFun acc;
  for (const auto& [m, c] : fk_terms(upper, lower, P, cap)) acc += c * RatFun(sympoly_at_ones(kernel_K(m, P)));
  return acc;
}

Verdict kummer_check(int q, const RatFun& beta, const RatFun& gamma, const DomainParams& P) {
  Verdict v;
  v.cell = cell_of(P, q, "kummer");
  v.cell["beta"] = beta.to_string();
  v.cell["gamma"] = gamma.to_string();
  SymPoly<RatFun> lhs = fk_2f1(RatFun(-q), beta, gamma, P);
  SymPoly<RatFun> rhs = moebius_clear(negate_vars(fk_2f1(RatFun(-q), gamma - beta, gamma, P)), q);
  v.set(lhs == rhs);
  if (!v.pass()) v.note("the two polynomials differ");
  return v;
}

RatFun c_nu(const DomainParams& P) {
  GammaQuotient g;
  g.mul_gindikin(P.r, P.a, 1, 0).div_gindikin(P.r, P.a, 1, -P.d_over_r());
  return reduce_exact(g);
}

RatFun c_q_nu(const DomainParams& P, int q) {
  const int p = P.genus(), r = P.r, a = P.a;
  const Rational qo = P.q_omega();
  GammaQuotient g;
  g.mul_gindikin(r, a, 1, Rational(-p - q + 2 * r + P.b))
      .mul_gindikin(r, a, 0, qo)
      .mul_gindikin(r, a, 0, Rational(p + q))
      .div_gindikin(r, a, 1, Rational(-p - q + 2 * r) - qo)
      .div_gindikin(r, a, 0, qo + q)
      .div_gindikin(r, a, 0, Rational(p));
  return reduce_exact(g);
}

RatFun conjecture_beta(const DomainParams& P, int q) {
  return RatFun::linear(-1, Rational(-P.b + 2 * P.genus() + q - 2 * P.r));
}

ConjectureOutcome conjecture_verify(const DomainParams& P, int q) {
  ConjectureOutcome out;
  Verdict& v = out.verdict;
  v.cell = cell_of(P, q, "conjecture");
  const RatFun p(P.genus());
  SymPoly<RatFun> S = repker_S(KernelSpaceSpec::stabilized(P, q)).value;

  SymPoly<RatFun> F = negate_vars(fk_2f1(RatFun(-q), conjecture_beta(P, q), p, P));
  RatFun c = c_q_nu(P, q);
  out.originRatio = S.coeff(Signature()) / (c * F.coeff(Signature()));
  auto ratio = proportionality(S, F);
  v.shapeMatch = ratio.has_value();
  if (ratio) {
    v.constantRatio = *ratio / c;
    v.set(*v.constantRatio == RatFun(1));
    if (!v.pass()) v.note("kernel is proportional to the conjectured 2F1 but the constant differs");
  } else {
    out.firstDifference = first_difference(S, F);
    v.set(false);
    v.note("kernel is not proportional to the conjectured 2F1; first differing signature " +
           out.firstDifference->to_string());
    v.note("ratio at the origin " + out.originRatio.to_string());
  }

  // nu -> nu + (r-1)(a-2) in both the parameter and the constant
  const long shift = static_cast<long>(P.r - 1) * (P.a - 2);
  SymPoly<RatFun> G = negate_vars(fk_2f1(RatFun(-q), conjecture_beta(P, q).subst_affine(1, shift), p, P));
  RatFun cs = c.subst_affine(1, shift);
  auto rr = proportionality(S, G);
  out.reconciledShape = rr.has_value();
  if (rr) out.reconciledRatio = *rr / cs;
  v.extra["shiftedNu"] = std::to_string(shift);
  v.extra["shiftedShapeMatch"] = out.reconciledShape ? "true" : "false";
  if (out.reconciledRatio) v.extra["shiftedConstantRatio"] = out.reconciledRatio->to_string();
  if (out.firstDifference) v.extra["firstDifference"] = out.firstDifference->to_string();
  v.extra["originRatio"] = out.originRatio.to_string();
  v.note(std::string("with nu shifted by ") + std::to_string(shift) + ": shape " +
         (out.reconciledShape ? "matches" : "differs") +
         (out.reconciledRatio ? ", constant ratio " + out.reconciledRatio->to_string() : ""));
  return out;
}

Verdict prop_pp_identity(const DomainParams& P, int q) {
  Verdict v;
  v.cell = cell_of(P, q, "propPP");
  const int p = P.genus(), r = P.r;
  // left: rho_Omega times the moment of the 2F1 in -x
  SymPoly<RatFun> F = negate_vars(fk_2f1(RatFun(-q), conjecture_beta(P, q), RatFun(p), P));
  RatFun lhs = RatFun(rho_omega(P)) * moment_of(F, P, WeightKind::Noncompact);
  // right: 3F2 at e over c_{nu-q}
  std::vector<RatFun> up{RatFun(-q), RatFun::linear(1, Rational(P.b - p - q + 2 * r)), RatFun(P.d_over_r())};
  std::vector<RatFun> lo{RatFun(p), RatFun::linear(1, Rational(-q))};
  RatFun rhs = fk_pfq_at_e(up, lo, P) / c_nu(P).subst_affine(1, -q);
  v.shapeMatch = true;
  v.constantRatio = lhs / rhs;
  v.set(lhs == rhs);
  if (!v.pass()) v.note("lhs " + lhs.to_string() + " rhs " + rhs.to_string());
  return v;
}

SymPoly<RatFun> rank1_closed_kernel(int d, int q) {
  if (d < 1 || q < 1) throw std::invalid_argument("rank1_closed_kernel needs d >= 1 and q >= 1");
  auto P1 = domain_params(1, 2, d - 1);
  const RatFun s = nu_var();
  // (q+s)_d C(q-1+d, d) 2F1(-(q-1), q+s+d; d+1; t)
  RatFun c = pochhammer(RatFun(s + q), d) * pochhammer(RatFun(q), d) / pochhammer(RatFun(1), d);
  return fk_2f1(RatFun(1 - q), s + (q + d), RatFun(d + 1), P1) * c;
}

const char* to_string(CoefficientFamily f) { return f == CoefficientFamily::Printed ? "printed" : "spherical"; }

RatFun rank1_coefficient(int d, int l, CoefficientFamily fam) {
  // (s-2l+1) Gamma(s+d+1-l) / (l! Gamma(s-l+2)) times d or (d)_l
  GammaQuotient g;
  g.mul(1, Rational(d + 1 - l)).div(1, Rational(2 - l));
  RatFun c = reduce_exact(g) * RatFun::linear(1, Rational(1 - 2 * l));
  Rational k = fam == CoefficientFamily::Printed ? Rational(d) : pochhammer(Rational(d), l);
  return c * RatFun(k / pochhammer(Rational(1), l));
}

Verdict rank1_sum_identity(int d, int q, CoefficientFamily fam) {
  if (d < 1 || q < 1) throw std::invalid_argument("rank1_sum_identity needs d >= 1 and q >= 1");
  Verdict v;
  v.cell = {{"d", std::to_string(d)}, {"q", std::to_string(q)}, {"family", to_string(fam)}, {"check", "rank1Sum"}};
  auto P1 = domain_params(1, 2, d - 1);
  const RatFun s = nu_var();
  SymPoly<RatFun> lhs(1);
  for (int l = 0; l < q; ++l) {
    RatFun c = rank1_coefficient(d, l, fam).subst_affine(1, 2 * q - 2);
    SymPoly<RatFun> F = fk_2f1(RatFun(-l), RatFun(l - 2 * q + 1) - s, RatFun(d), P1);
    lhs += moebius_clear(negate_vars(F), q - 1) * c;
  }
  SymPoly<RatFun> rhs = rank1_closed_kernel(d, q);
  auto ratio = proportionality(lhs, rhs);
  v.shapeMatch = ratio.has_value();
  if (ratio) v.constantRatio = *ratio;
  v.set(lhs == rhs);
  if (!v.pass()) {
    if (ratio) v.note("sides differ by the factor " + ratio->to_string("s"));
    else v.note("sides are not proportional");
  }
  return v;
}

RatFun rank1_d1(int d, int j) {
  GammaQuotient g;
  g.mul(1, Rational(-j)).div(1, Rational(1 - d - j));
  Rational k = pochhammer(Rational(d), j) / pochhammer(Rational(1), j);
  return reduce_exact(g) * RatFun::linear(1, Rational(-d - 2 * j)) * RatFun(k);
}

Rational rank1_d1(int d, int j, const Rational& nu) { return rank1_d1(d, j).eval(nu); }

Verdict rank1_spherical_sum(int d, const Rational& nu, int mOrder) {
  Verdict v;
  v.cell = {{"d", std::to_string(d)}, {"nu", to_string(nu)}, {"mOrder", std::to_string(mOrder)},
            {"check", "rank1Spherical"}};
  if (nu <= d) throw std::invalid_argument("rank1_spherical_sum needs nu > d");
  auto P1 = domain_params(1, 2, d - 1);
  SymPoly<RatFun> S = repker_S(KernelSpaceSpec::truncation(P1, mOrder, nu)).value;
  std::vector<SymPoly<RatFun>> terms;
  SymPoly<RatFun> sum(1);
  for (int j = 0; j < mOrder && Rational(2 * j) < nu - d; ++j) {
    SymPoly<RatFun> F = negate_vars(fk_2f1(RatFun(-j), RatFun(d + j) - RatFun(nu), RatFun(d), P1));
    terms.push_back(F * RatFun(rank1_d1(d, j, nu)));
    sum += terms.back();
  }
  bool ok = sum == S;
  if (!ok) v.note("Grammian kernel differs from the spherical sum");
  const RatFun rho(rho_omega(P1));
  for (size_t i = 0; i < terms.size(); ++i)
    for (size_t j = i + 1; j < terms.size(); ++j) {
      Rational ip = (rho * moment_of(terms[i] * terms[j], P1, WeightKind::Noncompact)).eval(nu);
      if (sgn(ip) != 0) {
        ok = false;
        v.note("summands " + std::to_string(i) + " and " + std::to_string(j) + " are not orthogonal");
      }
    }
  v.set(ok);
  return v;
}

}  // namespace conekernels
