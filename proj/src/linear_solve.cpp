#include "conekernels/linear_solve.hpp"

#include <stdexcept>

namespace conekernels {

namespace {

void check_shape(size_t rows, size_t cols, size_t rhs) {
  if (rows != cols || rows != rhs) throw std::invalid_argument("linear_solve_exact: shape mismatch");
}

ZPoly poly_lcm(const ZPoly& x, const ZPoly& y) {
  if (zpoly::is_one(x)) return y;
  if (zpoly::is_one(y)) return x;
  ZPoly g = zpoly::gcd(x, y);
  return zpoly::mul(*zpoly::divexact(x, g), y);
}

// Multiplies a row of Q(x) entries by a common denominator, giving Z[x] entries.
std::vector<ZPoly> clear_row(const std::vector<RatFun>& row) {
  ZPoly L{Integer(1)};
  Integer l = 1;
  for (const auto& e : row) {
    if (e.is_zero()) continue;
    L = poly_lcm(L, e.den_primitive());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.scale().get_den_mpz_t());
  }
  std::vector<ZPoly> out(row.size());
  Integer g = 0;
  for (size_t j = 0; j < row.size(); ++j) {
    const auto& e = row[j];
    if (e.is_zero()) continue;
    Integer s = e.scale().get_num() * (l / e.scale().get_den());
    ZPoly q = zpoly::is_one(e.den_primitive()) ? L : *zpoly::divexact(L, e.den_primitive());
    out[j] = zpoly::scale(zpoly::mul(e.num_primitive(), q), s);
    Integer c = zpoly::content(out[j]);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  }
  if (g > 1)
    for (auto& p : out)
      for (auto& v : p) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  return out;
}

}  // namespace

std::vector<Rational> linear_solve_exact(const Matrix<Rational>& M, const std::vector<Rational>& v) {
  size_t n = M.size();
  check_shape(n, n ? M[0].size() : 0, v.size());
  Matrix<Rational> A = M;
  for (size_t i = 0; i < n; ++i) A[i].push_back(v[i]);
  for (size_t k = 0; k < n; ++k) {
    size_t piv = k;
    while (piv < n && sgn(A[piv][k]) == 0) ++piv;
    if (piv == n) throw SingularMatrix("singular matrix");
    std::swap(A[k], A[piv]);
    for (size_t i = k + 1; i < n; ++i) {
      if (sgn(A[i][k]) == 0) continue;
      Rational f = A[i][k] / A[k][k];
      for (size_t j = k; j <= n; ++j) A[i][j] -= f * A[k][j];
    }
  }
  std::vector<Rational> x(n);
  for (size_t ii = n; ii-- > 0;) {
    Rational s = A[ii][n];
    for (size_t j = ii + 1; j < n; ++j) s -= A[ii][j] * x[j];
    x[ii] = s / A[ii][ii];
  }
  return x;
}

std::vector<RatFun> linear_solve_exact(const Matrix<RatFun>& M, const std::vector<RatFun>& v) {
  size_t n = M.size();
  check_shape(n, n ? M[0].size() : 0, v.size());
  if (n == 0) return {};

  std::vector<std::vector<ZPoly>> A(n);
  for (size_t i = 0; i < n; ++i) {
    std::vector<RatFun> row = M[i];
    row.push_back(v[i]);
    A[i] = clear_row(row);
  }
  const auto original = A;

  ZPoly prev{Integer(1)};
  for (size_t k = 0; k < n; ++k) {
    size_t piv = n;
    for (size_t i = k; i < n; ++i) {
      if (A[i][k].empty()) continue;
      if (piv == n || zpoly::degree(A[i][k]) < zpoly::degree(A[piv][k])) piv = i;
    }
    if (piv == n) throw SingularMatrix("singular matrix");
    std::swap(A[k], A[piv]);
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j <= n; ++j) {
        ZPoly t = zpoly::sub(zpoly::mul(A[k][k], A[i][j]), zpoly::mul(A[i][k], A[k][j]));
        A[i][j] = zpoly::is_one(prev) ? std::move(t) : *zpoly::divexact(t, prev);
      }
      A[i][k].clear();
    }
    prev = A[k][k];
  }

  // x_i = y_i / D with D the last pivot
  const ZPoly& D = A[n - 1][n - 1];
  std::vector<ZPoly> y(n);
  for (size_t ii = n; ii-- > 0;) {
    ZPoly s = zpoly::mul(D, A[ii][n]);
    for (size_t j = ii + 1; j < n; ++j) s = zpoly::sub(s, zpoly::mul(A[ii][j], y[j]));
    auto q = zpoly::divexact(s, A[ii][ii]);
    if (!q) throw std::logic_error("fraction-free back-substitution is not exact");
    y[ii] = std::move(*q);
  }

  for (size_t i = 0; i < n; ++i) {
    ZPoly acc;
    for (size_t j = 0; j < n; ++j) acc = zpoly::add(acc, zpoly::mul(original[i][j], y[j]));
    if (acc != zpoly::mul(D, original[i][n])) throw std::logic_error("linear solve residual is nonzero");
  }

  std::vector<RatFun> x(n);
  for (size_t i = 0; i < n; ++i) {
    if (y[i].empty()) continue;
    ZPoly g = zpoly::gcd(y[i], D);
    ZPoly num = zpoly::is_one(g) ? y[i] : *zpoly::divexact(y[i], g);
    ZPoly den = zpoly::is_one(g) ? D : *zpoly::divexact(D, g);
    x[i] = RatFun::from_coprime(1, std::move(num), std::move(den));
  }
  return x;
}

}  // namespace conekernels
