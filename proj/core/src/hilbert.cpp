#include "multibaker/hilbert.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace multibaker {

MapParams::MapParams(int dim_, int left_dim_) : dim(dim_), left_dim(left_dim_) {
  if (dim < 2 || dim % 2 != 0)
    throw config_error("dim must be a positive even integer, got " + std::to_string(dim));
  if (left_dim < 1 || left_dim > dim - 1)
    throw config_error("left_dim must lie in [1, dim-1], got " + std::to_string(left_dim));
}

InternalOperator antiperiodic_fourier(int dim) {
  if (dim < 1) throw config_error("Fourier dimension must be >= 1, got " + std::to_string(dim));
  const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
  // (k+1/2)(l+1/2)/dim = (2k+1)(2l+1)/(4*dim); reduce the numerator mod
  // 4*dim so equal phases yield identical doubles (no drift, exact
  // symmetry under k<->l and under index reflection).
  const long period = 4L * dim;
  const double step = 2.0 * std::numbers::pi / static_cast<double>(period);
  InternalOperator g(dim, dim);
  for (int k = 0; k < dim; ++k) {
    for (int l = 0; l <= k; ++l) {
      const long n = (static_cast<long>(2 * k + 1) * (2 * l + 1)) % period;
      const Complex entry = std::polar(scale, -step * static_cast<double>(n));
      g(k, l) = entry;
      g(l, k) = entry;
    }
  }
  return g;
}

InternalOperator baker_operator(const MapParams& params) {
  InternalOperator blocks = InternalOperator::Zero(params.dim, params.dim);
  blocks.topLeftCorner(params.left_dim, params.left_dim) = antiperiodic_fourier(params.left_dim);
  blocks.bottomRightCorner(params.right_dim(), params.right_dim()) =
      antiperiodic_fourier(params.right_dim());
  return antiperiodic_fourier(params.dim).adjoint() * blocks;
}

InternalVector apply_operator(const InternalOperator& op, const InternalVector& v) {
  if (op.cols() != v.size())
    throw config_error("operator/vector dimension mismatch: " + std::to_string(op.cols()) +
                       " vs " + std::to_string(v.size()));
  return op * v;
}

double unitarity_error(const InternalOperator& op) {
  const InternalOperator residual =
      op.adjoint() * op - InternalOperator::Identity(op.rows(), op.cols());
  return residual.cwiseAbs().maxCoeff();
}

}  // namespace multibaker
