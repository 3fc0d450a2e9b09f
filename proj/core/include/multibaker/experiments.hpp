#ifndef MULTIBAKER_EXPERIMENTS_HPP
#define MULTIBAKER_EXPERIMENTS_HPP

#include <vector>

#include "multibaker/observables.hpp"
#include "multibaker/qlattice.hpp"

namespace multibaker {

/// Full coarse-grained record of one quantum evolution.
struct QuantumTraceResult {
  MapParams params;
  std::vector<double> mean_position;  // <x(t)>, t = 0..steps
  CurrentSeries current;              // J(t), t = 1..steps
  CurrentSeries smoothed;
};

/// Evolve the central-momentum initial state and extract mean position,
/// current and the trailing moving average. Norm conservation is enforced
/// every step; a drift beyond kNormDriftTol raises invariant_error.
QuantumTraceResult run_quantum_trace(const MapParams& params, int steps, int smooth_window);

/// Coarse-grained distribution P(m, t) of the evolved initial state.
LatticeDistribution run_quantum_snapshot(const MapParams& params, int time);

/// How the left block size follows the dimension in a dimension sweep.
enum class DimRule {
  kDimMinusTwo,  // left_dim = dim - 2
  kHalfPlusOne,  // left_dim = dim/2 + 1
};

struct SweepPoint {
  int dim;
  int left_dim;
  double split;
  double avg_current;  // mean J over the averaging window
};

/// Averaged current versus Hilbert dimension under a fixed left-block rule.
std::vector<SweepPoint> run_sweep_dim(DimRule rule, const std::vector<int>& dims, int steps,
                                      int avg_from, int avg_to, int workers = 1);

/// Averaged current versus split fraction at fixed dimension.
std::vector<SweepPoint> run_sweep_s(int dim, const std::vector<int>& left_dims, int steps,
                                    int avg_from, int avg_to, int workers = 1);

}  // namespace multibaker

#endif
