#ifndef MULTIBAKER_RNG_HPP
#define MULTIBAKER_RNG_HPP

#include <cstdint>

namespace multibaker {

// SplitMix64 (Steele, Lea, Flood; used by Java's SplittableRandom). A
// counter-based generator: 64-bit state advanced by a fixed increment,
// output produced by a mixing finalizer. Chosen so Monte Carlo streams can
// be partitioned by index instead of by thread.
//
// Stream-partitioning rule: particle i belongs to block b = i / kSampleBlock;
// block b draws from SplitMix64 seeded with block_stream_seed(seed, b), and
// each particle consumes exactly two draws (q then p). Results are therefore
// reproducible for a fixed seed regardless of how blocks are assigned to
// workers.

inline constexpr std::int64_t kSampleBlock = 1 << 16;

inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ull;
    return mix64(state_);
  }

  /// Uniform double in [0, 1) from the top 53 bits.
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
  std::uint64_t state_;
};

/// Seed of block b's stream. The finalizer decorrelates consecutive block
/// indices so streams are disjoint in practice.
inline std::uint64_t block_stream_seed(std::uint64_t seed, std::uint64_t block) {
  return mix64(mix64(seed) ^ (block * 0xD1B54A32D192ED03ull + 0x2545F4914F6CDD1Dull));
}

}  // namespace multibaker

#endif
