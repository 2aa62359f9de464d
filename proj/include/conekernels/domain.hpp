#pragma once

#include <string>
#include <vector>

#include "conekernels/ratfun.hpp"

namespace conekernels {

// Rank r, root multiplicity a and extra multiplicity b of a bounded symmetric
// domain. For r = 1 the multiplicity a carries no information and is set to 2.
struct DomainParams {
  int r = 1;
  int a = 2;
  int b = 0;

  int genus() const { return (r - 1) * a + b + 2; }               // p
  int dim() const { return r * (r - 1) * a / 2 + r * b + r; }     // d
  Rational q_omega() const { return frac((r - 1) * a, 2) + 1; }
  Rational d_over_r() const { return frac(dim(), r); }

  std::string to_string() const;
  friend bool operator==(const DomainParams&, const DomainParams&) = default;
  friend auto operator<=>(const DomainParams&, const DomainParams&) = default;
};

// Validates and normalizes (r, a, b). Throws std::invalid_argument.
DomainParams domain_params(int r, int a, int b);

// Cartan-type presets: "I" (m, n), "II" (n), "III" (m), "IV" (n), "V", "VI",
// and "ball" (d) for the unit ball of C^d.
DomainParams domain_preset(const std::string& type, const std::vector<int>& sizes);

}  // namespace conekernels
