#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "conekernels/compact_dual.hpp"
#include "conekernels/hyper_fk.hpp"
#include "conekernels/jack.hpp"
#include "conekernels/kernel_lab.hpp"
#include "conekernels/report.hpp"
#include "conekernels/spherical.hpp"

using namespace conekernels;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Options {
  int rank = 1, a = 2, b = 0, q = 0;
  std::optional<int> mOrder;
  std::string nu = "symbolic";
  std::string sig;
  std::string alpha = "1";
  std::optional<int> nvars;
  std::string kind = "S";
  int m = 1;
  int d = 1;
  std::string family = "both";
  bool json = false;
  std::string out;
  std::optional<int> jobs;
  std::string preset;
  std::string target = "all";
  std::string ranks, as, bs, qs;
};

std::optional<Rational> parse_nu(const std::string& s) {
  if (s == "symbolic") return std::nullopt;
  try {
    return parse_rational(s);
  } catch (const std::invalid_argument&) {
    throw UsageError("--nu must be a rational or 'symbolic', got '" + s + "'");
  }
}

long integer_nu(const std::string& s) {
  auto v = parse_nu(s);
  if (!v || v->get_den() != 1 || sgn(*v) < 0) throw UsageError("this check needs a nonnegative integer --nu");
  return v->get_num().get_si();
}

// "1..8" or "0,2,5"
std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  auto dots = s.find("..");
  try {
    if (dots != std::string::npos) {
      int lo = std::stoi(s.substr(0, dots)), hi = std::stoi(s.substr(dots + 2));
      for (int i = lo; i <= hi; ++i) out.push_back(i);
    } else {
      std::stringstream ss(s);
      for (std::string item; std::getline(ss, item, ',');) out.push_back(std::stoi(item));
    }
  } catch (const std::logic_error&) {
    throw UsageError("bad integer list '" + s + "'");
  }
  if (out.empty()) throw UsageError("empty integer list '" + s + "'");
  return out;
}

DomainParams params_of(const Options& o) {
  try {
    return domain_params(o.rank, o.a, o.b);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

KernelSpaceSpec space_of(const Options& o) {
  auto P = params_of(o);
  auto nu = parse_nu(o.nu);
  if (o.mOrder) return KernelSpaceSpec::truncation(P, *o.mOrder, nu);
  return KernelSpaceSpec::stabilized(P, o.q, nu);
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::runtime_error("cannot write " + path);
    }
  }
  std::ostream& os() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

int emit_verdicts(const Options& o, std::vector<Verdict> vs) {
  Report r = make_report(std::move(vs));
  Output out(o.out);
  out.os() << (o.json ? emit_json(r) : emit_table(r));
  return r.all_pass() ? 0 : kExitFail;
}

int cmd_params(const Options& o) {
  auto P = params_of(o);
  Output out(o.out);
  if (o.json) {
    nlohmann::json j{{"r", std::to_string(P.r)},        {"a", std::to_string(P.a)},
                     {"b", std::to_string(P.b)},        {"p", std::to_string(P.genus())},
                     {"d", std::to_string(P.dim())},    {"qOmega", to_string(P.q_omega())},
                     {"dOverR", to_string(P.d_over_r())}, {"rhoOmega", to_string(rho_omega(P))},
                     {"cNu", c_nu(P).to_string()}};
    out.os() << j.dump(2) << "\n";
    return 0;
  }
  out.os() << "domain " << P.to_string() << "\n"
           << "p = " << P.genus() << "\n"
           << "d = " << P.dim() << "\n"
           << "q_Omega = " << to_string(P.q_omega()) << "\n"
           << "d/r = " << to_string(P.d_over_r()) << "\n"
           << "c_Omega / pi^d = " << to_string(rho_omega(P)) << "\n"
           << "pi^d c_nu = " << c_nu(P).to_string() << "\n";
  return 0;
}

int cmd_jack(const Options& o) {
  Signature s = parse_signature(o.sig);
  const int n = o.nvars.value_or(std::max(1, s.length()));
  Output out(o.out);
  nlohmann::json j = nlohmann::json::object();
  if (o.alpha == "symbolic") {
    auto P = jack_P(s, RatFun::variable(), n);
    for (const auto& [m, c] : P.terms()) j[m.to_string()] = c.to_string("alpha");
  } else {
    Rational al;
    try {
      al = parse_rational(o.alpha);
    } catch (const std::invalid_argument&) {
      throw UsageError("--alpha must be a rational or 'symbolic'");
    }
    auto P = jack_P(s, al, n);
    for (const auto& [m, c] : P.terms()) j[m.to_string()] = to_string(c);
  }
  if (o.json) {
    out.os() << j.dump(2) << "\n";
  } else {
    out.os() << "P_" << s.to_string() << " in " << n << " variables, monomial basis\n";
    for (const auto& [m, c] : j.items()) out.os() << "  m_" << m << "  " << c.get<std::string>() << "\n";
  }
  return 0;
}

int cmd_kernel_k(const Options& o) {
  auto P = params_of(o);
  Signature s = parse_signature(o.sig);
  if (s.length() > P.r) throw UsageError("signature has more parts than the rank");
  const auto& K = kernel_K(s, P);
  Output out(o.out);
  if (o.json) {
    nlohmann::json j{{"signature", s.to_string()}, {"expanded", sympoly_expanded_string(K)}};
    for (const auto& [m, c] : K.terms()) j["monomial"][m.to_string()] = to_string(c);
    out.os() << j.dump(2) << "\n";
  } else {
    out.os() << sympoly_expanded_string(K) << "\n";
  }
  return 0;
}

int cmd_gram(const Options& o) {
  auto G = gram_matrix(space_of(o));
  Output out(o.out);
  if (o.json) {
    nlohmann::json j;
    for (const auto& s : G.basis) j["basis"].push_back(s.to_string());
    for (const auto& row : G.entries) {
      nlohmann::json jr = nlohmann::json::array();
      for (const auto& e : row) jr.push_back(e.to_string());
      j["entries"].push_back(jr);
    }
    j["piGrade"] = std::to_string(G.piGrade);
    out.os() << j.dump(2) << "\n";
    return 0;
  }
  out.os() << "basis:";
  for (const auto& s : G.basis) out.os() << " " << s.to_string();
  out.os() << "\nentries (times pi^d):\n";
  for (size_t i = 0; i < G.entries.size(); ++i)
    for (size_t k = 0; k < G.entries.size(); ++k)
      out.os() << "  [" << G.basis[i].to_string() << ", " << G.basis[k].to_string() << "] " << G.entries[i][k].to_string()
               << "\n";
  return 0;
}

int cmd_repker(const Options& o) {
  auto spec = space_of(o);
  std::string text, prefactor;
  if (o.kind == "S") {
    text = sympoly_expanded_string(repker_S(spec).value, "x");
  } else if (o.kind == "N" || o.kind == "P") {
    OriginKernel k = o.kind == "N" ? repker_N_origin(spec) : repker_P_origin(spec, o.m);
    text = sympoly_expanded_string(k.poly);
    prefactor = std::to_string(k.prefactorOneMinusTPower);
  } else {
    throw UsageError("--kind must be S, N or P");
  }
  Output out(o.out);
  if (o.json) {
    nlohmann::json j{{"kind", o.kind}, {"cell", spec.describe()}, {"kernel", text}, {"piGrade", "-1"}};
    if (!prefactor.empty()) j["prefactorOneMinusTPower"] = prefactor;
    out.os() << j.dump(2) << "\n";
  } else {
    if (!prefactor.empty()) out.os() << "prod (1 - t_j)^(" << prefactor << ") times\n";
    out.os() << text << "\n";
  }
  return 0;
}

int cmd_verify_conjecture(const Options& o) {
  if (parse_nu(o.nu)) throw UsageError("the conjecture is checked with nu symbolic");
  auto out = conjecture_verify(params_of(o), o.q);
  return emit_verdicts(o, {out.verdict});
}

int cmd_verify_compact(const Options& o) {
  auto out = gg_verify(params_of(o), integer_nu(o.nu), o.q);
  return emit_verdicts(o, {out.verdict});
}

int cmd_prop_pp(const Options& o) { return emit_verdicts(o, {prop_pp_identity(params_of(o), o.q)}); }

int cmd_rank1(const Options& o) {
  if (o.d < 1) throw UsageError("--d must be at least 1");
  std::vector<Verdict> vs;
  if (o.nu == "symbolic") {
    if (o.q < 1) throw UsageError("the rank-one sum needs --q >= 1");
    std::vector<CoefficientFamily> fams;
    if (o.family == "printed" || o.family == "both") fams.push_back(CoefficientFamily::Printed);
    if (o.family == "spherical" || o.family == "both") fams.push_back(CoefficientFamily::Spherical);
    if (fams.empty()) throw UsageError("--family must be printed, spherical or both");
    for (auto f : fams) vs.push_back(rank1_sum_identity(o.d, o.q, f));
    vs.push_back(conjecture_verify(domain_params(1, 2, o.d - 1), o.q).verdict);
  } else {
    // compact rank one at integer nu, degree q
    long nu = integer_nu(o.nu);
    vs.push_back(rank1_compact_coefficient_check(o.d, nu, o.q + 1));
    auto s = rank1_compact_suite(o.d, nu, o.q);
    vs.push_back(s.printed);
    vs.push_back(s.lemma);
  }
  return emit_verdicts(o, std::move(vs));
}

int cmd_grid(const Options& o) {
  GridTarget target;
  try {
    target = parse_target(o.target);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  GridSpec spec;
  if (!o.preset.empty()) {
    try {
      spec = grid_preset(o.preset, target);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  } else {
    spec.target = target;
    if (o.ranks.empty() && o.as.empty() && o.bs.empty() && o.qs.empty()) {
      // no cells at all
    } else {
      std::vector<long> nus;
      if (target == GridTarget::CompactGG)
        for (int v : parse_int_list(o.nu == "symbolic" ? "0..3" : o.nu)) nus.push_back(v);
      try {
        spec.add_product(parse_int_list(o.ranks.empty() ? "1" : o.ranks), parse_int_list(o.as.empty() ? "2" : o.as),
                         parse_int_list(o.bs.empty() ? "0" : o.bs), parse_int_list(o.qs.empty() ? "0" : o.qs), nus);
      } catch (const UsageError&) {
        throw;
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
    }
  }
  int jobs;
  try {
    jobs = resolve_jobs(o.jobs);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  Report r = run_grid(spec, jobs);
  Output out(o.out);
  out.os() << (o.json ? emit_json(r) : emit_table(r));
  return r.all_pass() ? 0 : kExitFail;
}

void domain_flags(CLI::App* c, Options& o) {
  c->add_option("--rank", o.rank, "rank r")->check(CLI::Range(1, 8));
  c->add_option("--a", o.a, "root multiplicity a (ignored for rank 1)");
  c->add_option("--b", o.b, "multiplicity b")->check(CLI::NonNegativeNumber);
}

void output_flags(CLI::App* c, Options& o) {
  c->add_flag("--json", o.json, "emit JSON");
  c->add_option("--out", o.out, "write to this file instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact reproducing kernels for symmetric cones and their compact duals"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);
  Options o;

  auto* params = app.add_subcommand("params", "derived constants of a domain");
  domain_flags(params, o);
  output_flags(params, o);

  auto* jack = app.add_subcommand("jack", "Jack polynomial P in the monomial basis");
  jack->add_option("--sig", o.sig, "signature, e.g. 2,1")->required();
  jack->add_option("--alpha", o.alpha, "rational alpha or 'symbolic'");
  jack->add_option("--nvars", o.nvars, "number of variables")->check(CLI::PositiveNumber);
  output_flags(jack, o);

  auto* kk = app.add_subcommand("kernel-k", "spherical kernel K_m(t, e)");
  domain_flags(kk, o);
  kk->add_option("--sig", o.sig, "signature m")->required();
  output_flags(kk, o);

  auto space_flags = [&](CLI::App* c) {
    domain_flags(c, o);
    c->add_option("--q", o.q, "stabilized basis m_1 <= q")->check(CLI::NonNegativeNumber);
    c->add_option("--m-order", o.mOrder, "truncation basis |m| < m-order")->check(CLI::PositiveNumber);
    c->add_option("--nu", o.nu, "rational nu or 'symbolic'");
    output_flags(c, o);
  };
  auto* gram = app.add_subcommand("gram", "Gram matrix of the K_m basis");
  space_flags(gram);
  auto* repker = app.add_subcommand("repker", "reproducing kernel at the origin");
  space_flags(repker);
  repker->add_option("--kind", o.kind, "S (cone chart), N or P (compact chart)");
  repker->add_option("--m", o.m, "order of P^m")->check(CLI::PositiveNumber);

  auto* vc = app.add_subcommand("verify-conjecture", "kernel of the stabilized space against the 2F1 closed form");
  space_flags(vc);
  auto* vcomp = app.add_subcommand("verify-compact", "compact dual kernel against its 2F1 closed form");
  space_flags(vcomp);
  auto* pp = app.add_subcommand("prop-pp", "integral of the 2F1 against the 3F2 value");
  space_flags(pp);

  auto* r1 = app.add_subcommand("rank1", "rank-one sum identities (compact ones with an integer --nu)");
  r1->add_option("--d", o.d, "dimension d")->check(CLI::PositiveNumber);
  r1->add_option("--q", o.q, "q")->check(CLI::NonNegativeNumber);
  r1->add_option("--nu", o.nu, "'symbolic' or an integer for the compact case");
  r1->add_option("--family", o.family, "printed, spherical or both");
  output_flags(r1, o);

  auto* grid = app.add_subcommand("grid", "run a parameter grid");
  grid->add_option("--preset", o.preset, "paper-r2, paper-r3, rank1 or compact-r2");
  grid->add_option("--target", o.target, "conjecture, compactGG, reproducing, proppp, rank1 or all");
  grid->add_option("--jobs", o.jobs, "worker threads (default CONEKERNELS_JOBS or all cores)");
  grid->add_option("--rank", o.ranks, "ranks, e.g. 2 or 1..3");
  grid->add_option("--a", o.as, "a values, e.g. 1..8");
  grid->add_option("--b", o.bs, "b values");
  grid->add_option("--q", o.qs, "q values");
  grid->add_option("--nu", o.nu, "nu values for compactGG, e.g. 0..3");
  output_flags(grid, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*params) return cmd_params(o);
    if (*jack) return cmd_jack(o);
    if (*kk) return cmd_kernel_k(o);
    if (*gram) return cmd_gram(o);
    if (*repker) return cmd_repker(o);
    if (*vc) return cmd_verify_conjecture(o);
    if (*vcomp) return cmd_verify_compact(o);
    if (*pp) return cmd_prop_pp(o);
    if (*r1) return cmd_rank1(o);
    if (*grid) return cmd_grid(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NontrivialityFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {  // parameters outside the admissible range
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
