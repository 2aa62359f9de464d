#include "conekernels/report.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdlib>
#include <ctime>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "conekernels/compact_dual.hpp"
#include "conekernels/hyper_fk.hpp"
#include "conekernels/kernel_lab.hpp"

namespace conekernels {

namespace {

const std::vector<std::pair<GridTarget, const char*>> kTargets = {
    {GridTarget::Conjecture, "conjecture"}, {GridTarget::CompactGG, "compactGG"},
    {GridTarget::Reproducing, "reproducing"}, {GridTarget::PropPP, "proppp"},
    {GridTarget::Rank1, "rank1"},           {GridTarget::All, "all"}};

std::vector<int> range(int lo, int hi) {
  std::vector<int> v;
  for (int i = lo; i <= hi; ++i) v.push_back(i);
  return v;
}

std::map<std::string, std::string> base_cell(const GridCell& c, const std::string& check) {
  std::map<std::string, std::string> m{{"r", std::to_string(c.params.r)},
                                       {"a", std::to_string(c.params.a)},
                                       {"b", std::to_string(c.params.b)},
                                       {"q", std::to_string(c.q)},
                                       {"check", check}};
  m["nu"] = c.nu ? std::to_string(*c.nu) : "symbolic";
  return m;
}

template <class Fn>
Verdict guarded(const GridCell& c, const std::string& check, Fn fn) {
  try {
    return fn();
  } catch (const ResourceLimit& e) {
    Verdict v;
    v.cell = base_cell(c, check);
    v.state = VerdictState::Resource;
    v.note(e.what());
    return v;
  } catch (const std::exception& e) {
    Verdict v;
    v.cell = base_cell(c, check);
    v.state = VerdictState::Error;
    v.note(e.what());
    return v;
  }
}

nlohmann::json poly_json(const PolyNu& p) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& c : p.coeffs()) a.push_back(to_string(c));
  return a;
}

std::string cell_text(const std::map<std::string, std::string>& cell) {
  std::string s;
  for (const auto& [k, v] : cell) {
    if (k == "check") continue;
    if (!s.empty()) s += ' ';
    s += k + "=" + v;
  }
  return s;
}

}  // namespace

const char* to_string(GridTarget t) {
  for (const auto& [k, n] : kTargets)
    if (k == t) return n;
  return "?";
}

GridTarget parse_target(const std::string& name) {
  for (const auto& [k, n] : kTargets)
    if (name == n) return k;
  throw std::invalid_argument("unknown target '" + name + "'");
}

void GridSpec::add_product(const std::vector<int>& ranks, const std::vector<int>& as, const std::vector<int>& bs,
                           const std::vector<int>& qs, const std::vector<long>& nus) {
  for (int r : ranks)
    for (int a : as)
      for (int b : bs)
        for (int q : qs) {
          GridCell c{domain_params(r, a, b), q, std::nullopt};
          if (nus.empty()) {
            cells.push_back(c);
            continue;
          }
          for (long n : nus) {
            c.nu = n;
            cells.push_back(c);
          }
        }
  normalize();
}

void GridSpec::normalize() {
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
}

std::vector<std::string> preset_names() { return {"paper-r2", "paper-r3", "rank1", "compact-r2"}; }

GridSpec grid_preset(const std::string& name, GridTarget target) {
  GridSpec g;
  g.target = target;
  if (name == "paper-r2") {
    g.add_product({2}, range(1, 8), range(0, 3), range(0, 2));
    g.add_product({2}, range(1, 4), range(0, 3), {3});
  } else if (name == "paper-r3") {
    g.add_product({3}, {2, 4}, range(0, 3), range(0, 2));
    g.add_product({3}, {8}, {0}, range(0, 2));
  } else if (name == "rank1") {
    // d = b + 1 in {1, 2, 3, 5}
    g.add_product({1}, {2}, {0, 1, 2, 4}, range(0, 3));
  } else if (name == "compact-r2") {
    g.add_product({1, 2}, range(1, 4), {0, 1}, range(0, 2), {0, 1, 2, 3});
  } else {
    throw std::invalid_argument("unknown preset '" + name + "'");
  }
  if (target == GridTarget::CompactGG) {
    // the compact check needs an integer nu
    std::vector<GridCell> out;
    for (const auto& c : g.cells) {
      if (c.nu) {
        out.push_back(c);
        continue;
      }
      for (long n = 0; n <= 3; ++n) out.push_back({c.params, c.q, n});
    }
    g.cells = std::move(out);
    g.normalize();
  }
  return g;
}

std::vector<Verdict> run_cell(const GridCell& c, GridTarget target) {
  std::vector<Verdict> out;
  const DomainParams& P = c.params;
  auto want = [&](GridTarget t) { return target == t || target == GridTarget::All; };

  if (target == GridTarget::CompactGG) {
    if (!c.nu) {
      Verdict v;
      v.cell = base_cell(c, "compactGG");
      v.state = VerdictState::Error;
      v.note("the compact check needs an integer nu");
      out.push_back(v);
      return out;
    }
    out.push_back(guarded(c, "compactGG", [&] { return gg_verify(P, *c.nu, c.q).verdict; }));
    return out;
  }
  if (want(GridTarget::Conjecture))
    out.push_back(guarded(c, "conjecture", [&] { return conjecture_verify(P, c.q).verdict; }));
  if (want(GridTarget::Reproducing))
    out.push_back(guarded(c, "reproducing",
                          [&] { return reproducing_property_check(KernelSpaceSpec::stabilized(P, c.q)); }));
  if (want(GridTarget::PropPP)) out.push_back(guarded(c, "propPP", [&] { return prop_pp_identity(P, c.q); }));
  // the rank-one sum runs over l < q, so it needs q >= 1
  if (want(GridTarget::Rank1) && P.r == 1 && c.q >= 1)
    for (auto fam : {CoefficientFamily::Printed, CoefficientFamily::Spherical})
      out.push_back(guarded(c, "rank1Sum", [&] { return rank1_sum_identity(P.dim(), c.q, fam); }));
  return out;
}

Report make_report(std::vector<Verdict> verdicts) {
  Report r;
  r.timestamp = report_timestamp();
  r.cells = std::move(verdicts);
  for (const auto& v : r.cells) {
    switch (v.state) {
      case VerdictState::Pass: ++r.pass; break;
      case VerdictState::Fail: ++r.fail; break;
      case VerdictState::Resource: ++r.resource; break;
      case VerdictState::Error: ++r.error; break;
    }
  }
  return r;
}

Report run_grid(const GridSpec& spec, int jobs) {
  const size_t n = spec.cells.size();
  std::vector<std::vector<Verdict>> slots(n);
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i; (i = next.fetch_add(1)) < n;) slots[i] = run_cell(spec.cells[i], spec.target);
  };
  const int t = std::max(1, std::min<int>(jobs, static_cast<int>(n)));
  if (t <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int k = 0; k < t; ++k) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  std::vector<Verdict> all;
  for (auto& s : slots)
    for (auto& v : s) all.push_back(std::move(v));
  return make_report(std::move(all));
}

int resolve_jobs(std::optional<int> flag) {
  if (flag) {
    if (*flag < 1) throw std::invalid_argument("--jobs must be at least 1");
    return *flag;
  }
  if (const char* env = std::getenv("CONEKERNELS_JOBS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) return static_cast<int>(v);
    throw std::invalid_argument(std::string("bad CONEKERNELS_JOBS '") + env + "'");
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::string report_timestamp() {
  std::time_t t = std::time(nullptr);
  if (const char* env = std::getenv("SOURCE_DATE_EPOCH")) t = static_cast<std::time_t>(std::strtoll(env, nullptr, 10));
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

nlohmann::json verdict_json(const Verdict& v) {
  nlohmann::json j;
  j["cell"] = v.cell;
  j["state"] = to_string(v.state);
  j["pass"] = v.pass();
  j["shapeMatch"] = v.shapeMatch ? nlohmann::json(*v.shapeMatch) : nlohmann::json(nullptr);
  if (v.constantRatio) {
    j["constantRatio"] = {{"num", poly_json(v.constantRatio->numerator())},
                          {"den", poly_json(v.constantRatio->denominator())},
                          {"text", v.constantRatio->to_string()}};
  } else {
    j["constantRatio"] = nullptr;
  }
  j["notes"] = v.notes;
  j["extra"] = v.extra;
  return j;
}

nlohmann::json report_json(const Report& r) {
  nlohmann::json j;
  j["toolVersion"] = r.toolVersion;
  j["timestamp"] = r.timestamp;
  j["cells"] = nlohmann::json::array();
  for (const auto& v : r.cells) j["cells"].push_back(verdict_json(v));
  j["summary"] = {{"pass", r.pass}, {"fail", r.fail}};
  if (r.resource) j["summary"]["resource"] = r.resource;
  if (r.error) j["summary"]["error"] = r.error;
  return j;
}

std::string emit_json(const Report& r) { return report_json(r).dump(2) + "\n"; }

std::string emit_verdict_table(const std::vector<Verdict>& vs) {
  std::vector<std::array<std::string, 5>> rows;
  rows.push_back({"check", "cell", "state", "shape", "ratio"});
  for (const auto& v : vs) {
    auto it = v.cell.find("check");
    rows.push_back({it == v.cell.end() ? "" : it->second, cell_text(v.cell), to_string(v.state),
                    v.shapeMatch ? (*v.shapeMatch ? "yes" : "no") : "-",
                    v.constantRatio ? v.constantRatio->to_string() : "-"});
  }
  std::array<size_t, 5> w{};
  for (const auto& row : rows)
    for (size_t k = 0; k < 4; ++k) w[k] = std::max(w[k], row[k].size());
  std::ostringstream os;
  for (const auto& row : rows) {
    for (size_t k = 0; k < 4; ++k) os << row[k] << std::string(w[k] - row[k].size() + 2, ' ');
    os << row[4] << "\n";
  }
  return os.str();
}

std::string emit_table(const Report& r) {
  std::ostringstream os;
  os << emit_verdict_table(r.cells);
  os << "pass " << r.pass << "  fail " << r.fail;
  if (r.resource) os << "  resource " << r.resource;
  if (r.error) os << "  error " << r.error;
  os << "\n";
  return os.str();
}

}  // namespace conekernels
