#ifndef MULTIBAKER_HILBERT_HPP
#define MULTIBAKER_HILBERT_HPP

#include <complex>

#include <Eigen/Dense>

#include "multibaker/errors.hpp"

namespace multibaker {

using Complex = std::complex<double>;
using InternalOperator = Eigen::MatrixXcd;
using InternalVector = Eigen::VectorXcd;

/// Tolerance for ||M^dag M - I||_max of operators that must be unitary.
inline constexpr double kUnitarityTol = 1e-12;

/// Parameters of the asymmetric baker map on a dim-dimensional internal
/// space. The split fraction is left_dim/dim; the transport projectors
/// split the position basis at dim/2 independent of the baker split, which
/// is why dim must be even.
struct MapParams {
  int dim;       // internal Hilbert dimension, h_eff = 1/dim
  int left_dim;  // size of the stretched (left) block, 1 <= left_dim <= dim-1

  MapParams(int dim_, int left_dim_);

  int right_dim() const { return dim - left_dim; }
  double split() const { return static_cast<double>(left_dim) / dim; }

  /// Parameters of the reflected map (split fraction 1 - s).
  MapParams mirror() const { return MapParams(dim, dim - left_dim); }

  friend bool operator==(const MapParams&, const MapParams&) = default;
};

/// Discrete Fourier transform with antiperiodic boundary conditions:
/// entry (k,l) is exp(-2*pi*i*(k+1/2)(l+1/2)/dim) / sqrt(dim).
/// Phases are reduced as exact integers before evaluation, so the matrix
/// is symmetric and reflection-invariant bit-for-bit.
InternalOperator antiperiodic_fourier(int dim);

/// Asymmetric quantum baker operator
/// B = F_dim^dag * blockdiag(F_left, F_right),
/// with the left block on position indices [0, left_dim).
InternalOperator baker_operator(const MapParams& params);

/// Dense matrix-vector product with a dimension check.
InternalVector apply_operator(const InternalOperator& op, const InternalVector& v);

/// max |(M^dag M - I)_{kl}|
double unitarity_error(const InternalOperator& op);

}  // namespace multibaker

#endif
