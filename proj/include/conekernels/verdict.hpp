#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "conekernels/ratfun.hpp"

namespace conekernels {

enum class VerdictState { Pass, Fail, Resource, Error };

const char* to_string(VerdictState s);

// Outcome of one identity check. cell holds the parameters as exact strings;
// constantRatio is the proportionality witness when the two sides are
// proportional.
struct Verdict {
  std::map<std::string, std::string> cell;
  VerdictState state = VerdictState::Fail;
  std::optional<bool> shapeMatch;
  std::optional<RatFun> constantRatio;
  std::vector<std::string> notes;
  std::map<std::string, std::string> extra;  // further exact facts, e.g. a reconciled ratio

  bool pass() const { return state == VerdictState::Pass; }
  void note(std::string s) { notes.push_back(std::move(s)); }
  void set(bool ok) { state = ok ? VerdictState::Pass : VerdictState::Fail; }
};

// Combined state: any error wins, then resource, then fail.
VerdictState combine(VerdictState a, VerdictState b);

}  // namespace conekernels
