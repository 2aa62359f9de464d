#include "conekernels/signature.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace conekernels {

Signature::Signature(std::initializer_list<int> parts) : Signature(std::vector<int>(parts)) {}

Signature::Signature(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw std::invalid_argument("negative signature entry");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("signature must be non-increasing");
  }
}

int Signature::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Signature Signature::shifted(int r) const {
  if (length() > r) throw std::invalid_argument("signature longer than rank");
  std::vector<int> p(r);
  for (int i = 0; i < r; ++i) p[i] = (*this)[i] + 1;
  return Signature(std::move(p));
}

Signature Signature::unshifted(int r) const {
  if (length() != r) throw std::invalid_argument("signature has a zero entry");
  std::vector<int> p(parts_);
  for (auto& v : p) --v;
  return Signature(std::move(p));
}

std::vector<int> Signature::multiplicities(int r) const {
  std::vector<int> out;
  int i = 0;
  while (i < r) {
    int j = i;
    while (j < r && (*this)[j] == (*this)[i]) ++j;
    out.push_back(j - i);
    i = j;
  }
  return out;
}

std::string Signature::to_string() const {
  std::ostringstream os;
  os << "(";
  if (parts_.empty()) os << "0";
  for (size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << ")";
  return os.str();
}

bool dominated_by(const Signature& mu, const Signature& lambda) {
  int n = std::max(mu.length(), lambda.length());
  int sm = 0, sl = 0;
  for (int i = 0; i < n; ++i) {
    sm += mu[i];
    sl += lambda[i];
    if (sm > sl) return false;
  }
  return true;
}

std::vector<Signature> gen_signatures(int maxWeight, int maxFirstPart, int maxParts) {
  std::vector<Signature> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int budget, int cap) {
    out.emplace_back(cur);
    if (static_cast<int>(cur.size()) == maxParts) return;
    for (int v = 1; v <= std::min(budget, cap); ++v) {
      cur.push_back(v);
      rec(budget - v, v);
      cur.pop_back();
    }
  };
  if (maxWeight >= 0 && maxParts >= 0) rec(maxWeight, maxFirstPart);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Signature> partitions(int n) {
  std::vector<Signature> out;
  for (auto& s : gen_signatures(n, n, n))
    if (s.weight() == n) out.push_back(s);
  return out;
}

Signature parse_signature(const std::string& s) {
  std::string t;
  for (char c : s)
    if (c != '(' && c != ')' && c != ' ') t += c;
  std::vector<int> parts;
  std::stringstream ss(t);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw std::invalid_argument("malformed signature: " + s);
    size_t pos = 0;
    int v = std::stoi(item, &pos);
    if (pos != item.size()) throw std::invalid_argument("malformed signature: " + s);
    parts.push_back(v);
  }
  return Signature(std::move(parts));
}

}  // namespace conekernels
