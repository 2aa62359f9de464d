#include "conekernels/verdict.hpp"

namespace conekernels {

const char* to_string(VerdictState s) {
  switch (s) {
    case VerdictState::Pass:
      return "pass";
    case VerdictState::Fail:
      return "fail";
    case VerdictState::Resource:
      return "resource";
    case VerdictState::Error:
      return "error";
  }
  return "?";
}

VerdictState combine(VerdictState a, VerdictState b) {
  auto rank = [](VerdictState s) {
    switch (s) {
      case VerdictState::Error:
        return 3;
      case VerdictState::Resource:
        return 2;
      case VerdictState::Fail:
        return 1;
      default:
        return 0;
    }
  };
  return rank(a) >= rank(b) ? a : b;
}

}  // namespace conekernels
