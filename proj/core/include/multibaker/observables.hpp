#ifndef MULTIBAKER_OBSERVABLES_HPP
#define MULTIBAKER_OBSERVABLES_HPP

#include <optional>
#include <utility>
#include <vector>

#include "multibaker/qlattice.hpp"

namespace multibaker {

/// Tolerance on |sum of probabilities - 1| of a coarse-grained distribution.
inline constexpr double kNormalizationTol = 1e-10;

/// Coarse-grained probability over lattice cells at one time.
struct LatticeDistribution {
  int min_cell = 0;
  std::vector<double> probs;  // one entry per cell starting at min_cell
  int time = 0;

  int max_cell() const { return min_cell + static_cast<int>(probs.size()) - 1; }
  double prob(int m) const {
    return (m < min_cell || m > max_cell()) ? 0.0 : probs[m - min_cell];
  }
};

/// Time series of the coarse-grained current, values[i] = J(i+1) for
/// t = 1..length(). Smoothed/averaged variants are derived from values
/// and annotated with their windows.
struct CurrentSeries {
  std::vector<double> values;
  std::optional<int> smoothing_window;
  std::optional<std::pair<int, int>> average_window;

  int length() const { return static_cast<int>(values.size()); }
  double at(int t) const { return values.at(static_cast<std::size_t>(t) - 1); }
};

/// Trace over the internal space: P(m) = sum_components weight * ||cell_m||^2.
/// Throws invariant_error if the result is not normalized.
LatticeDistribution coarse_probability(const MixedState& state);

/// First moment sum_m m * P(m).
double mean_position(const LatticeDistribution& dist);

/// First difference of a mean-position sequence indexed t = 0..T.
CurrentSeries current_from_means(const std::vector<double>& means);

/// Trailing moving average of exactly `window` samples; entries before
/// t = window are NaN. window = 1 returns the series unchanged.
CurrentSeries smooth(const CurrentSeries& series, int window);

/// Arithmetic mean of J(t) over the inclusive range [t_start, t_end].
double average_current(const CurrentSeries& series, int t_start, int t_end);

/// Max over t <= steps and all m of |P_s(m,t) - P_{1-s}(-m,t)| when both
/// maps evolve the central-momentum initial state. Checks the reflection
/// identity that makes the averaged current an odd function of s.
double check_s1_antisymmetry(const MapParams& params, int steps);

/// Per-time deviations behind check_s1_antisymmetry, indexed t = 0..steps.
std::vector<double> s1_antisymmetry_profile(const MapParams& params, int steps);

}  // namespace multibaker

#endif
