#ifndef MULTIBAKER_TESTS_DENSE_ORACLE_HPP
#define MULTIBAKER_TESTS_DENSE_ORACLE_HPP

// Brute-force reference for the structured lattice stepper: the one-step
// unitary on a truncated window of cells is built as an explicit dense
// matrix with plain loops and powered by repeated matrix-vector products.
// Written against the formulas directly (std::exp, hand-rolled products)
// so it shares no code path with the library it checks.

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

namespace dense_oracle {

using cd = std::complex<double>;
using Matrix = std::vector<std::vector<cd>>;

inline Matrix fourier(int dim) {
  const double pi = std::acos(-1.0);
  const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
  Matrix g(static_cast<std::size_t>(dim), std::vector<cd>(static_cast<std::size_t>(dim)));
  for (int k = 0; k < dim; ++k)
    for (int l = 0; l < dim; ++l)
      g[k][l] = scale * std::exp(cd(0.0, -2.0 * pi * (k + 0.5) * (l + 0.5) / dim));
  return g;
}

inline Matrix baker(int dim, int left) {
  const Matrix g_full = fourier(dim);
  const Matrix g_left = fourier(left);
  const Matrix g_right = fourier(dim - left);
  Matrix blocks(static_cast<std::size_t>(dim), std::vector<cd>(static_cast<std::size_t>(dim)));
  for (int k = 0; k < dim; ++k)
    for (int l = 0; l < dim; ++l) {
      if (k < left && l < left)
        blocks[k][l] = g_left[k][l];
      else if (k >= left && l >= left)
        blocks[k][l] = g_right[k - left][l - left];
      else
        blocks[k][l] = cd(0.0, 0.0);
    }
  Matrix b(static_cast<std::size_t>(dim), std::vector<cd>(static_cast<std::size_t>(dim)));
  for (int a = 0; a < dim; ++a)
    for (int c = 0; c < dim; ++c) {
      cd sum(0.0, 0.0);
      for (int k = 0; k < dim; ++k) sum += std::conj(g_full[k][a]) * blocks[k][c];
      b[a][c] = sum;
    }
  return b;
}

// Lattice cells -half_window..half_window, flattened as (m + half_window)*dim + j.
class LatticeOracle {
public:
  LatticeOracle(int dim, int left, int half_window)
      : dim_(dim), half_window_(half_window), size_((2 * half_window + 1) * dim) {
    const Matrix b = baker(dim, left);
    step_.assign(static_cast<std::size_t>(size_) * size_, cd(0.0, 0.0));
    // amplitude at (cell m, position j) moves to cell m+1 for j < dim/2 and
    // to m-1 otherwise, then the baker operator mixes positions in place
    for (int m = -half_window; m <= half_window; ++m)
      for (int j = 0; j < dim; ++j) {
        const int target = j < dim / 2 ? m + 1 : m - 1;
        if (target < -half_window || target > half_window) continue;
        for (int a = 0; a < dim; ++a)
          step_[static_cast<std::size_t>(index(target, a)) * size_ + index(m, j)] = b[a][j];
      }
  }

  int index(int cell, int position) const { return (cell + half_window_) * dim_ + position; }
  int dim() const { return dim_; }
  int half_window() const { return half_window_; }

  /// Evolves a state localized at cell 0, returning the full flat vector.
  std::vector<cd> evolve(const std::vector<cd>& internal_at_zero, int steps) const {
    std::vector<cd> state(static_cast<std::size_t>(size_), cd(0.0, 0.0));
    for (int j = 0; j < dim_; ++j)
      state[static_cast<std::size_t>(index(0, j))] = internal_at_zero[static_cast<std::size_t>(j)];
    std::vector<cd> next(static_cast<std::size_t>(size_));
    for (int t = 0; t < steps; ++t) {
      for (int row = 0; row < size_; ++row) {
        cd sum(0.0, 0.0);
        const cd* matrix_row = &step_[static_cast<std::size_t>(row) * size_];
        for (int col = 0; col < size_; ++col) sum += matrix_row[col] * state[static_cast<std::size_t>(col)];
        next[static_cast<std::size_t>(row)] = sum;
      }
      state.swap(next);
    }
    return state;
  }

private:
  int dim_;
  int half_window_;
  int size_;
  std::vector<cd> step_;
};

}  // namespace dense_oracle

#endif
