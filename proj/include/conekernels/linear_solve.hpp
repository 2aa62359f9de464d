#pragma once

#include <stdexcept>
#include <vector>

#include "conekernels/ratfun.hpp"

namespace conekernels {

template <class F>
using Matrix = std::vector<std::vector<F>>;

struct SingularMatrix : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exact solve of M x = v. Throws SingularMatrix.
std::vector<Rational> linear_solve_exact(const Matrix<Rational>& M, const std::vector<Rational>& v);

// Over Q(x): rows are cleared to Z[x], eliminated fraction-free (Bareiss,
// lowest-degree pivot) and back-substituted over the final determinant. The
// integer-polynomial residual is checked before returning.
std::vector<RatFun> linear_solve_exact(const Matrix<RatFun>& M, const std::vector<RatFun>& v);

}  // namespace conekernels
