#include "multibaker/experiments.hpp"

#include <atomic>
#include <cmath>
#include <string>
#include <thread>

namespace multibaker {

namespace {

void check_norms(const MixedState& state) {
  for (const auto& component : state.components()) {
    const double drift = std::abs(component.state.total_weight() - 1.0);
    if (drift > kNormDriftTol)
      throw invariant_error("norm drift " + std::to_string(drift) + " beyond tolerance at step " +
                            std::to_string(state.step_count()));
  }
}

template <typename Fn>
void parallel_tasks(int n_tasks, int workers, Fn&& fn) {
  workers = std::min(std::max(workers, 1), n_tasks);
  if (workers <= 1) {
    for (int i = 0; i < n_tasks; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < n_tasks; i = next.fetch_add(1)) fn(i);
    });
  }
  for (auto& thread : pool) thread.join();
}

double averaged_trace_current(const MapParams& params, int steps, int avg_from, int avg_to) {
  const QuantumTraceResult trace = run_quantum_trace(params, steps, 1);
  return average_current(trace.current, avg_from, avg_to);
}

}  // namespace

QuantumTraceResult run_quantum_trace(const MapParams& params, int steps, int smooth_window) {
  if (steps < 1) throw config_error("steps must be >= 1");
  if (smooth_window < 1 || smooth_window > steps)
    throw config_error("smoothing window must lie in [1, steps]");
  const QuantumMultibaker map(params);
  MixedState state = initial_state(params, steps);

  std::vector<double> means(static_cast<std::size_t>(steps) + 1, 0.0);
  means[0] = mean_position(coarse_probability(state));
  map.evolve(state, steps, [&](int t, const MixedState& current_state) {
    check_norms(current_state);
    means[static_cast<std::size_t>(t)] = mean_position(coarse_probability(current_state));
  });

  QuantumTraceResult result{params, std::move(means), {}, {}};
  result.current = current_from_means(result.mean_position);
  result.smoothed = smooth(result.current, smooth_window);
  return result;
}

LatticeDistribution run_quantum_snapshot(const MapParams& params, int time) {
  if (time < 0) throw config_error("snapshot time must be >= 0");
  const QuantumMultibaker map(params);
  MixedState state = initial_state(params);
  map.evolve(state, time);
  check_norms(state);
  return coarse_probability(state);
}

std::vector<SweepPoint> run_sweep_dim(DimRule rule, const std::vector<int>& dims, int steps,
                                      int avg_from, int avg_to, int workers) {
  if (dims.empty()) throw config_error("dimension sweep needs at least one dimension");
  std::vector<MapParams> points;
  points.reserve(dims.size());
  for (int dim : dims) {
    if (dim < 4) throw config_error("dimension sweep needs dim >= 4, got " + std::to_string(dim));
    const int left = rule == DimRule::kDimMinusTwo ? dim - 2 : dim / 2 + 1;
    points.emplace_back(dim, left);  // rejects odd dims
  }
  std::vector<SweepPoint> result(points.size());
  parallel_tasks(static_cast<int>(points.size()), workers, [&](int i) {
    const MapParams& p = points[static_cast<std::size_t>(i)];
    result[static_cast<std::size_t>(i)] = {p.dim, p.left_dim, p.split(),
                                           averaged_trace_current(p, steps, avg_from, avg_to)};
  });
  return result;
}

std::vector<SweepPoint> run_sweep_s(int dim, const std::vector<int>& left_dims, int steps,
                                    int avg_from, int avg_to, int workers) {
  if (left_dims.empty()) throw config_error("split sweep needs at least one left_dim");
  std::vector<MapParams> points;
  points.reserve(left_dims.size());
  for (int left : left_dims) points.emplace_back(dim, left);
  std::vector<SweepPoint> result(points.size());
  parallel_tasks(static_cast<int>(points.size()), workers, [&](int i) {
    const MapParams& p = points[static_cast<std::size_t>(i)];
    result[static_cast<std::size_t>(i)] = {p.dim, p.left_dim, p.split(),
                                           averaged_trace_current(p, steps, avg_from, avg_to)};
  });
  return result;
}

}  // namespace multibaker
