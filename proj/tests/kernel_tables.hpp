#pragma once

// Published low-degree kernels, as polynomials in the multiplicity a.

#include <vector>

#include "conekernels/sympoly.hpp"

namespace conekernels::tables {

struct Entry {
  Signature m;
  SymPoly<RatFun> want;
};

inline RatFun A() { return RatFun::variable(); }
inline SymPoly<RatFun> mf(int r, Signature s, RatFun c) { return SymPoly<RatFun>::monomial(r, s, c); }

// K_m(t, e) for r = 2
inline std::vector<Entry> rank2_kernels() {
  return {{{}, mf(2, {}, 1)},
          {{1}, mf(2, {1}, 1)},
          {{1, 1}, mf(2, {1, 1}, RatFun(2) / (A() + 2))},
          {{2}, mf(2, {2}, Rational(1, 2)) + mf(2, {1, 1}, A() / (A() + 2))},
          {{2, 1}, mf(2, {2, 1}, RatFun(2) / (A() + 4))},
          {{2, 2}, mf(2, {2, 2}, RatFun(2) / ((A() + 2) * (A() + 4)))}};
}

// phi_m(t) for r = 3
inline std::vector<Entry> rank3_spherical() {
  RatFun d = 3 * (3 * A() + 2);
  return {{{}, mf(3, {}, 1)},
          {{1}, mf(3, {1}, Rational(1, 3))},
          {{1, 1}, mf(3, {1, 1}, Rational(1, 3))},
          {{1, 1, 1}, mf(3, {1, 1, 1}, 1)},
          {{2}, mf(3, {2}, (A() + 2) / d) + mf(3, {1, 1}, 2 * A() / d)},
          {{2, 1}, mf(3, {2, 1}, (A() + 1) / d) + mf(3, {1, 1, 1}, 3 * A() / d)},
          {{2, 1, 1}, mf(3, {2, 1, 1}, Rational(1, 3))},
          {{2, 2}, mf(3, {2, 2}, (A() + 2) / d) + mf(3, {2, 1, 1}, 2 * A() / d)},
          {{2, 2, 1}, mf(3, {2, 2, 1}, Rational(1, 3))},
          {{2, 2, 2}, mf(3, {2, 2, 2}, 1)}};
}

}  // namespace conekernels::tables
