#include "multibaker/observables.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace multibaker {

LatticeDistribution coarse_probability(const MixedState& state) {
  LatticeDistribution dist;
  dist.min_cell = state.min_cell();
  dist.time = state.step_count();
  dist.probs.assign(static_cast<std::size_t>(state.max_cell() - dist.min_cell + 1), 0.0);
  for (const auto& component : state.components()) {
    for (int m = component.state.min_cell(); m <= component.state.max_cell(); ++m)
      dist.probs[m - dist.min_cell] += component.weight * component.state.cell_weight(m);
  }
  const double total = std::accumulate(dist.probs.begin(), dist.probs.end(), 0.0);
  if (std::abs(total - 1.0) > kNormalizationTol)
    throw invariant_error("coarse-grained distribution not normalized: sum = " +
                          std::to_string(total));
  return dist;
}

double mean_position(const LatticeDistribution& dist) {
  double mean = 0.0;
  for (std::size_t i = 0; i < dist.probs.size(); ++i)
    mean += (dist.min_cell + static_cast<int>(i)) * dist.probs[i];
  return mean;
}

CurrentSeries current_from_means(const std::vector<double>& means) {
  if (means.size() < 2) throw config_error("current needs a trajectory of length >= 2");
  CurrentSeries series;
  series.values.reserve(means.size() - 1);
  for (std::size_t t = 1; t < means.size(); ++t)
    series.values.push_back(means[t] - means[t - 1]);
  return series;
}

CurrentSeries smooth(const CurrentSeries& series, int window) {
  if (window < 1 || window > series.length())
    throw config_error("smoothing window must lie in [1, series length]");
  CurrentSeries out;
  out.smoothing_window = window;
  out.average_window = series.average_window;
  out.values.assign(series.values.size(), std::numeric_limits<double>::quiet_NaN());
  double running = 0.0;
  for (int t = 1; t <= series.length(); ++t) {
    running += series.at(t);
    if (t > window) running -= series.at(t - window);
    if (t >= window) out.values[t - 1] = running / window;
  }
  return out;
}

double average_current(const CurrentSeries& series, int t_start, int t_end) {
  if (t_start < 1 || t_start > t_end || t_end > series.length())
    throw config_error("invalid averaging range [" + std::to_string(t_start) + ", " +
                       std::to_string(t_end) + "] for series of length " +
                       std::to_string(series.length()));
  double sum = 0.0;
  for (int t = t_start; t <= t_end; ++t) sum += series.at(t);
  return sum / (t_end - t_start + 1);
}

std::vector<double> s1_antisymmetry_profile(const MapParams& params, int steps) {
  if (steps < 1) throw config_error("steps must be >= 1");
  const QuantumMultibaker forward(params);
  const QuantumMultibaker mirrored(params.mirror());
  MixedState state_s = initial_state(params, steps);
  MixedState state_1ms = initial_state(params.mirror(), steps);

  std::vector<double> deviations(static_cast<std::size_t>(steps) + 1, 0.0);
  const auto compare = [](const LatticeDistribution& a, const LatticeDistribution& b) {
    double dev = 0.0;
    for (int m = std::min(a.min_cell, -b.max_cell()); m <= std::max(a.max_cell(), -b.min_cell); ++m)
      dev = std::max(dev, std::abs(a.prob(m) - b.prob(-m)));
    return dev;
  };
  deviations[0] = compare(coarse_probability(state_s), coarse_probability(state_1ms));
  for (int t = 1; t <= steps; ++t) {
    for (auto& c : state_s.components()) c.state.apply_step(forward.baker());
    for (auto& c : state_1ms.components()) c.state.apply_step(mirrored.baker());
    deviations[t] = compare(coarse_probability(state_s), coarse_probability(state_1ms));
  }
  return deviations;
}

double check_s1_antisymmetry(const MapParams& params, int steps) {
  const std::vector<double> profile = s1_antisymmetry_profile(params, steps);
  return *std::max_element(profile.begin(), profile.end());
}

}  // namespace multibaker
