#include "multibaker/classical.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "multibaker/rng.hpp"

namespace multibaker {

void Region::validate() const {
  if (!(q_lo < q_hi) || !(p_lo < p_hi)) throw config_error("region is empty");
  if (q_lo < 0.0 || q_hi > 1.0 || p_lo < 0.0 || p_hi > 1.0)
    throw config_error("region must lie inside the unit square");
}

namespace {

ClassicalParticle sample_particle(SplitMix64& rng, const Region& region) {
  double q = region.q_lo + rng.next_unit() * (region.q_hi - region.q_lo);
  double p = region.p_lo + rng.next_unit() * (region.p_hi - region.p_lo);
  if (q >= region.q_hi) q = std::nextafter(region.q_hi, region.q_lo);
  if (p >= region.p_hi) p = std::nextafter(region.p_hi, region.p_lo);
  return {0, q, p};
}

}  // namespace

ClassicalEnsemble sample_ensemble(const Region& region, std::int64_t count, std::uint64_t seed) {
  region.validate();
  if (count < 1) throw config_error("ensemble count must be >= 1");
  ClassicalEnsemble ensemble;
  ensemble.seed = seed;
  ensemble.particles.reserve(static_cast<std::size_t>(count));
  for (std::int64_t block = 0; block * kSampleBlock < count; ++block) {
    SplitMix64 rng(block_stream_seed(seed, static_cast<std::uint64_t>(block)));
    const std::int64_t in_block = std::min(kSampleBlock, count - block * kSampleBlock);
    for (std::int64_t i = 0; i < in_block; ++i)
      ensemble.particles.push_back(sample_particle(rng, region));
  }
  return ensemble;
}

namespace {

// Integer-exact per-worker accumulators; merging is a plain sum, so the
// result does not depend on how blocks were assigned.
struct Accumulators {
  std::vector<std::int64_t> cell_sum;  // per time step
  std::vector<std::int64_t> hist;      // snapshot histogram over [-snap, snap]
  std::int64_t snap_sum = 0;
  std::int64_t snap_sq = 0;
  std::int64_t disp_sum = 0;  // m(t_end) - m(t_start - 1) over the averaging window
  std::int64_t disp_sq = 0;

  explicit Accumulators(int steps, int snapshot_time)
      : cell_sum(static_cast<std::size_t>(steps) + 1, 0),
        hist(snapshot_time >= 0 ? 2 * static_cast<std::size_t>(snapshot_time) + 1 : 0, 0) {}

  void merge(const Accumulators& other) {
    for (std::size_t i = 0; i < cell_sum.size(); ++i) cell_sum[i] += other.cell_sum[i];
    for (std::size_t i = 0; i < hist.size(); ++i) hist[i] += other.hist[i];
    snap_sum += other.snap_sum;
    snap_sq += other.snap_sq;
    disp_sum += other.disp_sum;
    disp_sq += other.disp_sq;
  }
};

void run_blocks(double split, const Region& region, std::uint64_t seed, std::int64_t count,
                int steps, int snapshot_time, int window_from, int window_to,
                std::int64_t first_block, std::int64_t block_stride, Accumulators& acc) {
  const std::int64_t n_blocks = (count + kSampleBlock - 1) / kSampleBlock;
  for (std::int64_t block = first_block; block < n_blocks; block += block_stride) {
    SplitMix64 rng(block_stream_seed(seed, static_cast<std::uint64_t>(block)));
    const std::int64_t in_block = std::min(kSampleBlock, count - block * kSampleBlock);
    for (std::int64_t i = 0; i < in_block; ++i) {
      ClassicalParticle particle = sample_particle(rng, region);
      int window_start_cell = 0;
      if (snapshot_time == 0) acc.hist[0] += 1;  // everything starts at cell 0
      for (int t = 1; t <= steps; ++t) {
        particle = multibaker_step(split, particle);
        acc.cell_sum[static_cast<std::size_t>(t)] += particle.cell;
        if (t == snapshot_time) {
          acc.hist[static_cast<std::size_t>(particle.cell + snapshot_time)] += 1;
          acc.snap_sum += particle.cell;
          acc.snap_sq += static_cast<std::int64_t>(particle.cell) * particle.cell;
        }
        if (t == window_from - 1) window_start_cell = particle.cell;
        if (t == window_to) {
          const std::int64_t d = particle.cell - window_start_cell;
          acc.disp_sum += d;
          acc.disp_sq += d * d;
        }
      }
    }
  }
}

}  // namespace

ClassicalTrace evolve_ensemble(double split, const Region& region, std::int64_t count,
                               std::uint64_t seed, int steps,
                               const ClassicalRunOptions& options) {
  region.validate();
  if (!(split > 0.0 && split < 1.0))
    throw config_error("baker split parameter must lie in (0, 1)");
  if (count < 1) throw config_error("ensemble count must be >= 1");
  if (steps < 1) throw config_error("steps must be >= 1");
  if (options.snapshot_time > steps)
    throw config_error("snapshot time exceeds the step budget");
  int window_from = 0, window_to = -1;
  if (options.average_window) {
    std::tie(window_from, window_to) = *options.average_window;
    if (window_from < 1 || window_from > window_to || window_to > steps)
      throw config_error("invalid averaging window");
  }

  const int workers = std::max(1, options.workers);
  std::vector<Accumulators> partials(static_cast<std::size_t>(workers),
                                     Accumulators(steps, options.snapshot_time));
  if (workers == 1) {
    run_blocks(split, region, seed, count, steps, options.snapshot_time, window_from, window_to,
               0, 1, partials[0]);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w)
      pool.emplace_back(run_blocks, split, std::cref(region), seed, count, steps,
                        options.snapshot_time, window_from, window_to, w, workers,
                        std::ref(partials[static_cast<std::size_t>(w)]));
    for (auto& thread : pool) thread.join();
  }
  Accumulators total = std::move(partials[0]);
  for (std::size_t w = 1; w < partials.size(); ++w) total.merge(partials[w]);

  ClassicalTrace trace;
  trace.count = count;
  trace.mean_cell.resize(static_cast<std::size_t>(steps) + 1);
  for (int t = 0; t <= steps; ++t)
    trace.mean_cell[static_cast<std::size_t>(t)] =
        static_cast<double>(total.cell_sum[static_cast<std::size_t>(t)]) /
        static_cast<double>(count);
  trace.current = classical_current(trace.mean_cell);
  trace.stderrs.resize(static_cast<std::size_t>(steps));
  for (int t = 1; t <= steps; ++t) {
    // every particle moves exactly one cell per step, so the per-particle
    // step is a +-1 variable with variance 1 - J^2
    const double j = trace.current.at(t);
    trace.stderrs[static_cast<std::size_t>(t - 1)] =
        std::sqrt(std::max(0.0, 1.0 - j * j) / static_cast<double>(count));
  }

  if (options.snapshot_time >= 0) {
    const int snap = options.snapshot_time;
    LatticeDistribution dist;
    dist.min_cell = -snap;
    dist.time = snap;
    dist.probs.resize(total.hist.size());
    for (std::size_t i = 0; i < total.hist.size(); ++i)
      dist.probs[i] = static_cast<double>(total.hist[i]) / static_cast<double>(count);
    trace.snapshot = std::move(dist);
    const double mean = static_cast<double>(total.snap_sum) / static_cast<double>(count);
    const double var =
        static_cast<double>(total.snap_sq) / static_cast<double>(count) - mean * mean;
    trace.snapshot_mean = mean;
    trace.snapshot_mean_stderr =
        count > 1 ? std::sqrt(std::max(0.0, var) / static_cast<double>(count - 1)) : 0.0;
  }

  if (options.average_window) {
    const double width = window_to - window_from + 1;
    const double mean_d = static_cast<double>(total.disp_sum) / static_cast<double>(count);
    const double var_d =
        static_cast<double>(total.disp_sq) / static_cast<double>(count) - mean_d * mean_d;
    trace.current.average_window = options.average_window;
    trace.window_mean = mean_d / width;
    trace.window_mean_stderr =
        count > 1 ? std::sqrt(std::max(0.0, var_d) / static_cast<double>(count - 1)) / width : 0.0;
  }
  return trace;
}

}  // namespace multibaker
