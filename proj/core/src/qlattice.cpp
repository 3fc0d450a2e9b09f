#include "multibaker/qlattice.hpp"

#include <cassert>
#include <cmath>
#include <string>

namespace multibaker {

LatticeWavefunction::LatticeWavefunction(const MapParams& params, const InternalVector& internal,
                                         int reserve_steps)
    : params_(params) {
  if (internal.size() != params.dim)
    throw config_error("internal vector dimension " + std::to_string(internal.size()) +
                       " does not match dim " + std::to_string(params.dim));
  if (std::abs(internal.norm() - 1.0) > 1e-10)
    throw invariant_error("initial internal vector is not normalized");
  const int pad = reserve_steps > 0 ? reserve_steps + 1 : 0;
  min_cell_ = -pad;
  cells_ = Eigen::MatrixXcd::Zero(params.dim, 2 * pad + 1);
  cells_.col(pad) = internal;
}

InternalVector LatticeWavefunction::cell(int m) const {
  if (m < min_cell() || m > max_cell()) return InternalVector::Zero(params_.dim);
  return cells_.col(m - min_cell_);
}

double LatticeWavefunction::cell_weight(int m) const {
  if (m < min_cell() || m > max_cell()) return 0.0;
  return cells_.col(m - min_cell_).squaredNorm();
}

void LatticeWavefunction::grow_to(int lo, int hi) {
  if (lo >= min_cell() && hi <= max_cell()) return;
  const int new_lo = std::min(lo, min_cell());
  const int new_hi = std::max(hi, max_cell());
  Eigen::MatrixXcd grown = Eigen::MatrixXcd::Zero(params_.dim, new_hi - new_lo + 1);
  grown.middleCols(min_cell_ - new_lo, cells_.cols()) = cells_;
  cells_ = std::move(grown);
  min_cell_ = new_lo;
}

void LatticeWavefunction::apply_step(const InternalOperator& baker) {
  // Support after this step is contained in [-(steps_+1), steps_+1].
  grow_to(-(steps_ + 1), steps_ + 1);
  const Eigen::Index half = params_.dim / 2;
  const Eigen::Index width = cells_.cols();
  // The outermost columns are beyond the light cone, hence exactly zero;
  // shifting never pushes amplitude out of the window.
  assert(cells_.col(0).isZero(0.0) && cells_.col(width - 1).isZero(0.0));
  Eigen::MatrixXcd shifted = Eigen::MatrixXcd::Zero(params_.dim, width);
  shifted.topRows(half).rightCols(width - 1) = cells_.topRows(half).leftCols(width - 1);
  shifted.bottomRows(half).leftCols(width - 1) = cells_.bottomRows(half).rightCols(width - 1);
  cells_.noalias() = baker * shifted;
  ++steps_;
}

MixedState::MixedState(std::vector<Component> components) : components_(std::move(components)) {
  if (components_.empty()) throw config_error("mixed state needs at least one component");
  double total = 0.0;
  for (const auto& c : components_) {
    if (c.weight <= 0.0 || c.weight > 1.0)
      throw config_error("component weight must lie in (0, 1]");
    total += c.weight;
  }
  if (std::abs(total - 1.0) > 1e-12) throw invariant_error("component weights do not sum to 1");
}

int MixedState::min_cell() const {
  int lo = components_.front().state.min_cell();
  for (const auto& c : components_) lo = std::min(lo, c.state.min_cell());
  return lo;
}

int MixedState::max_cell() const {
  int hi = components_.front().state.max_cell();
  for (const auto& c : components_) hi = std::max(hi, c.state.max_cell());
  return hi;
}

MixedState initial_state(const MapParams& params, int reserve_steps) {
  const InternalOperator fourier = antiperiodic_fourier(params.dim);
  std::vector<MixedState::Component> components;
  for (int k = params.dim / 2 - 1; k <= params.dim / 2; ++k)
    components.push_back({0.5, LatticeWavefunction(params, fourier.col(k), reserve_steps)});
  return MixedState(std::move(components));
}

LatticeWavefunction quantum_step(const LatticeWavefunction& state) {
  LatticeWavefunction out = state;
  out.apply_step(baker_operator(state.params()));
  return out;
}

}  // namespace multibaker
