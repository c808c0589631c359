#pragma once

#include <cstdint>

namespace royaltylab {

// Counter-based generator built on the SplitMix64 sequence (Steele, Lea &
// Flood, "Fast splittable pseudorandom number generators", OOPSLA 2014).
//
//   output(n) = mix64(key + (n+1) * 0x9E3779B97F4A7C15)
//
// where mix64 is the SplitMix64 finalizer. Every (seed, stream) pair owns an
// independent sequence addressed purely by counter, so parallel consumers can
// draw without shared state and a fixed seed reproduces the same values on
// any thread count.
class CounterRng {
 public:
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;

  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
      : key_(mix64(mix64(seed + kGamma) ^ mix64(stream + 2 * kGamma))) {}

  // SplitMix64 finalizer (bijective avalanche hash).
  static constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  std::uint64_t next_u64() { return mix64(key_ + (++counter_) * kGamma); }

  // Uniform in [0, 1), 53-bit resolution.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  std::uint64_t key() const { return key_; }
  std::uint64_t counter() const { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace royaltylab
