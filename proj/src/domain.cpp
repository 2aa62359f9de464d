#include "conekernels/domain.hpp"

#include <sstream>
#include <stdexcept>

namespace conekernels {

std::string DomainParams::to_string() const {
  std::ostringstream os;
  os << "r=" << r << " a=" << a << " b=" << b << " p=" << genus() << " d=" << dim();
  return os.str();
}

DomainParams domain_params(int r, int a, int b) {
  if (r < 1) throw std::invalid_argument("rank must be at least 1");
  if (b < 0) throw std::invalid_argument("b must be nonnegative");
  if (r == 1) return {1, 2, b};
  if (a < 1) throw std::invalid_argument("a must be at least 1");
  return {r, a, b};
}

DomainParams domain_preset(const std::string& type, const std::vector<int>& sizes) {
  auto need = [&](size_t k) {
    if (sizes.size() != k) throw std::invalid_argument("preset " + type + " expects " + std::to_string(k) + " sizes");
  };
  if (type == "I") {
    need(2);
    int m = sizes[0], n = sizes[1];
    if (m < 1 || n < m) throw std::invalid_argument("type I needs 1 <= m <= n");
    return domain_params(m, 2, n - m);
  }
  if (type == "II") {
    need(1);
    if (sizes[0] < 2) throw std::invalid_argument("type II needs n >= 2");
    return domain_params(sizes[0], 1, 0);
  }
  if (type == "III") {
    need(1);
    int m = sizes[0];
    if (m < 4) throw std::invalid_argument("type III needs m >= 4");
    int r = m / 2;
    return domain_params(r, 4, 2 * (m - 2 * r));
  }
  if (type == "IV") {
    need(1);
    int n = sizes[0];
    if (n < 3) throw std::invalid_argument("type IV needs n >= 3");
    return domain_params(2, n - 2, 0);
  }
  if (type == "V") {
    need(0);
    return domain_params(2, 6, 4);
  }
  if (type == "VI") {
    need(0);
    return domain_params(3, 8, 0);
  }
  if (type == "ball") {
    need(1);
    if (sizes[0] < 1) throw std::invalid_argument("ball needs d >= 1");
    return domain_params(1, 2, sizes[0] - 1);
  }
  throw std::invalid_argument("unknown preset " + type);
}

}  // namespace conekernels
