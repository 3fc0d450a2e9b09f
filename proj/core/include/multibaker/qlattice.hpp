#ifndef MULTIBAKER_QLATTICE_HPP
#define MULTIBAKER_QLATTICE_HPP

#include <utility>
#include <vector>

#include "multibaker/hilbert.hpp"

namespace multibaker {

/// Permitted drift of the total norm of an evolved state.
inline constexpr double kNormDriftTol = 1e-9;

/// Pure state on lattice (x) internal space, stored as one internal
/// column vector per lattice cell inside a finite window. The window is
/// grown ahead of the light cone; there is no periodic wrap, and cells
/// outside the window are exactly zero by construction.
class LatticeWavefunction {
public:
  /// State localized at cell 0 with the given internal vector (must be
  /// normalized). If reserve_steps > 0 the window is pre-allocated to
  /// [-(reserve_steps+1), reserve_steps+1] so no reallocation happens
  /// while stepping up to that budget.
  LatticeWavefunction(const MapParams& params, const InternalVector& internal,
                      int reserve_steps = 0);

  const MapParams& params() const { return params_; }
  int min_cell() const { return min_cell_; }
  int max_cell() const { return min_cell_ + static_cast<int>(cells_.cols()) - 1; }
  int step_count() const { return steps_; }

  /// Internal vector at cell m (zero vector outside the window).
  InternalVector cell(int m) const;

  /// ||cell_m||^2
  double cell_weight(int m) const;

  /// Sum of cell weights; stays within kNormDriftTol of 1 under stepping.
  double total_weight() const { return cells_.squaredNorm(); }

  /// One multibaker step: position indices [0, dim/2) of every cell shift
  /// to cell m+1 and indices [dim/2, dim) to cell m-1, then the baker
  /// operator acts on each cell. The window grows as needed.
  void apply_step(const InternalOperator& baker);

private:
  void grow_to(int lo, int hi);

  MapParams params_;
  int min_cell_ = 0;
  int steps_ = 0;
  Eigen::MatrixXcd cells_;  // dim x window, column j = cell (min_cell_ + j)
};

/// Rank-limited density operator: weighted list of pure components.
/// Weights lie in (0,1] and sum to 1 within 1e-12.
class MixedState {
public:
  struct Component {
    double weight;
    LatticeWavefunction state;
  };

  explicit MixedState(std::vector<Component> components);

  const std::vector<Component>& components() const { return components_; }
  std::vector<Component>& components() { return components_; }

  int step_count() const { return components_.front().state.step_count(); }
  int min_cell() const;
  int max_cell() const;

private:
  std::vector<Component> components_;
};

/// Incoherent mixture of the two central momentum eigenstates at cell 0:
/// weight 1/2 each for columns dim/2-1 and dim/2 of the antiperiodic
/// Fourier transform.
MixedState initial_state(const MapParams& params, int reserve_steps = 0);

/// Owns the baker operator for one parameter set and drives the stepping.
class QuantumMultibaker {
public:
  explicit QuantumMultibaker(const MapParams& params)
      : params_(params), baker_(baker_operator(params)) {}

  const MapParams& params() const { return params_; }
  const InternalOperator& baker() const { return baker_; }

  void step(LatticeWavefunction& state) const { state.apply_step(baker_); }

  /// Value-returning form of step().
  LatticeWavefunction stepped(const LatticeWavefunction& state) const {
    LatticeWavefunction out = state;
    out.apply_step(baker_);
    return out;
  }

  /// Evolve every component independently for `steps` steps; weights are
  /// untouched. The observer is called as observer(t, state) after each
  /// step, which gives per-step access without retaining snapshots.
  template <typename Observer>
  void evolve(MixedState& state, int steps, Observer&& observer) const {
    if (steps < 0) throw config_error("steps must be >= 0");
    for (int t = 1; t <= steps; ++t) {
      for (auto& component : state.components()) component.state.apply_step(baker_);
      observer(t, std::as_const(state));
    }
  }

  void evolve(MixedState& state, int steps) const {
    evolve(state, steps, [](int, const MixedState&) {});
  }

private:
  MapParams params_;
  InternalOperator baker_;
};

/// Value-returning single step (op contract; stepping many times through
/// QuantumMultibaker avoids rebuilding the baker operator).
LatticeWavefunction quantum_step(const LatticeWavefunction& state);

}  // namespace multibaker

#endif
