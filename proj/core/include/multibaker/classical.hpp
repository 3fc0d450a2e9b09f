#ifndef MULTIBAKER_CLASSICAL_HPP
#define MULTIBAKER_CLASSICAL_HPP

#include <cmath>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "multibaker/errors.hpp"
#include "multibaker/observables.hpp"

namespace multibaker {

/// Point in the lattice phase space: cell index plus position/momentum
/// inside the unit square of that cell, both in [0, 1).
struct ClassicalParticle {
  int cell = 0;
  double q = 0.0;
  double p = 0.0;
};

/// Axis-aligned half-open rectangle [q_lo, q_hi) x [p_lo, p_hi) inside the
/// unit square, used to describe initial ensembles.
struct Region {
  double q_lo = 0.0, q_hi = 1.0;
  double p_lo = 0.0, p_hi = 1.0;

  static Region full() { return {}; }
  static Region square(double center_q, double center_p, double side) {
    return {center_q - side / 2, center_q + side / 2, center_p - side / 2, center_p + side / 2};
  }
  /// Phase-space footprint of the two central momentum eigenstates for a
  /// dim-dimensional internal space: the full q range with p in
  /// [(dim/2-1)/dim, (dim/2+1)/dim). Used as the classical analog of the
  /// quantum initial state.
  static Region momentum_strip(int dim) {
    return {0.0, 1.0, (dim / 2 - 1) / static_cast<double>(dim),
            (dim / 2 + 1) / static_cast<double>(dim)};
  }

  double area() const { return (q_hi - q_lo) * (p_hi - p_lo); }
  void validate() const;
};

struct ClassicalEnsemble {
  std::vector<ClassicalParticle> particles;
  std::uint64_t seed = 0;

  std::int64_t count() const { return static_cast<std::int64_t>(particles.size()); }
};

/// Asymmetric baker map on the unit square, split parameter in (0, 1):
/// the left branch [0, split) stretches horizontally onto the bottom band,
/// the right branch [split, 1) onto the top band. Area-preserving.
inline std::pair<double, double> baker_step(double split, double q, double p) {
  if (!(split > 0.0 && split < 1.0))
    throw config_error("baker split parameter must lie in (0, 1)");
  double q_out, p_out;
  if (q < split) {
    q_out = q / split;
    p_out = split * p;
  } else {
    q_out = (q - split) / (1.0 - split);
    p_out = (1.0 - split) * p + split;
  }
  // keep the half-open unit square under rounding
  if (q_out >= 1.0) q_out = std::nextafter(1.0, 0.0);
  if (p_out >= 1.0) p_out = std::nextafter(1.0, 0.0);
  return {q_out, p_out};
}

/// Unbiased transport between cells: the q < 1/2 half moves one cell right,
/// the q >= 1/2 half one cell left (the boundary belongs to the left mover).
inline ClassicalParticle transport_step(ClassicalParticle particle) {
  particle.cell += particle.q < 0.5 ? 1 : -1;
  return particle;
}

/// One multibaker step: transport first, then the baker map inside the
/// destination cell.
inline ClassicalParticle multibaker_step(double split, ClassicalParticle particle) {
  particle = transport_step(particle);
  const auto [q, p] = baker_step(split, particle.q, particle.p);
  particle.q = q;
  particle.p = p;
  return particle;
}

/// Uniform sample of `count` particles in `region`, all at cell 0.
/// Reproducible from the seed; see rng.hpp for the partitioning rule.
ClassicalEnsemble sample_ensemble(const Region& region, std::int64_t count, std::uint64_t seed);

/// Classical coarse-grained current: first difference of the mean cell
/// index. Shares the series contract with the quantum current.
inline CurrentSeries classical_current(const std::vector<double>& mean_cells) {
  return current_from_means(mean_cells);
}

struct ClassicalRunOptions {
  int workers = 1;
  int snapshot_time = -1;  // < 0 disables the histogram
  std::optional<std::pair<int, int>> average_window;
};

/// Monte Carlo trace of a classical ensemble. Sums over particles are
/// integer-exact, so results are bit-identical for any worker count.
struct ClassicalTrace {
  std::int64_t count = 0;
  std::vector<double> mean_cell;  // <m(t)>, t = 0..steps
  CurrentSeries current;          // J_class(t), t = 1..steps
  std::vector<double> stderrs;    // standard error of J_class(t), index t-1

  std::optional<LatticeDistribution> snapshot;  // P(m, snapshot_time)
  double snapshot_mean = 0.0;
  double snapshot_mean_stderr = 0.0;

  std::optional<double> window_mean;  // mean J over average_window
  std::optional<double> window_mean_stderr;
};

/// Samples `count` particles in `region` (streamed block by block, never
/// materialized) and evolves them `steps` multibaker steps.
ClassicalTrace evolve_ensemble(double split, const Region& region, std::int64_t count,
                               std::uint64_t seed, int steps,
                               const ClassicalRunOptions& options = {});

}  // namespace multibaker

#endif
