#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "conekernels/domain.hpp"
#include "conekernels/verdict.hpp"

namespace conekernels {

inline constexpr const char* kToolVersion = "0.1.0";

enum class GridTarget { Conjecture, CompactGG, Reproducing, PropPP, Rank1, All };

const char* to_string(GridTarget t);
// Throws std::invalid_argument on an unknown name.
GridTarget parse_target(const std::string& name);

// One parameter point. nu is only used by the compact target, where it is an
// integer; every other target keeps nu symbolic.
struct GridCell {
  DomainParams params;
  int q = 0;
  std::optional<long> nu;
  friend auto operator<=>(const GridCell&, const GridCell&) = default;
  friend bool operator==(const GridCell&, const GridCell&) = default;
};

struct GridSpec {
  std::vector<GridCell> cells;  // kept sorted and free of duplicates
  GridTarget target = GridTarget::All;

  // Every (r, a, b, q) of the lists; a is normalized away for r = 1.
  void add_product(const std::vector<int>& ranks, const std::vector<int>& as, const std::vector<int>& bs,
                   const std::vector<int>& qs, const std::vector<long>& nus = {});
  void normalize();
};

// paper-r2, paper-r3, rank1, compact-r2. Throws std::invalid_argument.
GridSpec grid_preset(const std::string& name, GridTarget target);
std::vector<std::string> preset_names();

struct Report {
  std::string toolVersion = kToolVersion;
  std::string timestamp;
  std::vector<Verdict> cells;
  int pass = 0, fail = 0, resource = 0, error = 0;

  bool all_pass() const { return fail == 0 && error == 0; }
};

// The verdicts of one cell for the given target, in a fixed order. Exceptions
// are caught: ResourceLimit becomes a resource verdict, anything else an error.
std::vector<Verdict> run_cell(const GridCell& cell, GridTarget target);

// Evaluates the cells on up to jobs threads; the output order depends only on
// the cell list.
Report run_grid(const GridSpec& spec, int jobs);
Report make_report(std::vector<Verdict> verdicts);

// --jobs when given, else CONEKERNELS_JOBS, else the hardware concurrency.
int resolve_jobs(std::optional<int> flag);
// UTC ISO 8601 of SOURCE_DATE_EPOCH when set, else of the current time.
std::string report_timestamp();

nlohmann::json verdict_json(const Verdict& v);
nlohmann::json report_json(const Report& r);
std::string emit_json(const Report& r);
std::string emit_table(const Report& r);
std::string emit_verdict_table(const std::vector<Verdict>& vs);

}  // namespace conekernels
