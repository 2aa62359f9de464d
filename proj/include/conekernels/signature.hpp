#pragma once

#include <compare>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace conekernels {

// Partition m_1 >= ... >= m_k > 0; the empty partition is the zero signature.
// Ordered lexicographically on zero-padded tuples.
class Signature {
 public:
  Signature() = default;
  Signature(std::initializer_list<int> parts);
  explicit Signature(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int weight() const;
  int first() const { return parts_.empty() ? 0 : parts_[0]; }
  int operator[](int i) const { return i < length() ? parts_[i] : 0; }

  // m + (1^r), defined for length() <= r
  Signature shifted(int r) const;
  // m - (1^r), requires length() == r
  Signature unshifted(int r) const;
  // Multiplicity counts of each distinct part, including zeros up to r.
  std::vector<int> multiplicities(int r) const;

  std::string to_string() const;

  friend auto operator<=>(const Signature&, const Signature&) = default;
  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  std::vector<int> parts_;
};

// mu <= lambda in dominance: every partial sum of mu is at most that of lambda.
bool dominated_by(const Signature& mu, const Signature& lambda);

// All signatures with at most maxParts parts, first part at most maxFirstPart
// and weight at most maxWeight, in increasing order.
std::vector<Signature> gen_signatures(int maxWeight, int maxFirstPart, int maxParts);

// Partitions of n in increasing order.
std::vector<Signature> partitions(int n);

Signature parse_signature(const std::string& s);  // "2,1" or "(2,1)"

}  // namespace conekernels
