#pragma once

#include <cstdint>
#include <vector>

namespace asknav {

// Deterministic PRNG with explicitly specified output algorithms.
//
// The C++ standard pins the mt19937 engine but leaves the distribution
// adaptors implementation-defined, so seeded runs would not reproduce
// across standard libraries. This PCG32 generator plus hand-written
// draws gives bit-identical streams everywhere.
class Rng {
 public:
  explicit Rng(uint64_t seed) { reseed(seed); }

  void reseed(uint64_t seed);

  // Raw 32-bit output (PCG-XSH-RR).
  uint32_t next_u32();
  uint64_t next_u64();

  // Uniform integer in [lo, hi], inclusive. Unbiased rejection sampling.
  int uniform_int(int lo, int hi);

  // Uniform double in [0, 1) with 53 random mantissa bits.
  double uniform_real();

  // Uniform double in [lo, hi).
  double uniform_real(double lo, double hi);

  // Bernoulli draw with probability p of true.
  bool bernoulli(double p);

  // Index drawn from an unnormalized non-negative weight vector.
  int categorical(const std::vector<double>& probs);

  // In-place Fisher-Yates shuffle.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      size_t j = static_cast<size_t>(uniform_int(0, static_cast<int>(i) - 1));
      std::swap(v[i - 1], v[j]);
    }
  }

  uint64_t state() const { return state_; }
  uint64_t inc() const { return inc_; }

 private:
  uint64_t state_ = 0;
  uint64_t inc_ = 0;
};

// SplitMix64 step, used for seed derivation.
uint64_t splitmix64(uint64_t x);

// Derives an independent child seed from (root, tag, index).
// Fixed-counter scheme so parallel or resumed consumers agree on streams.
uint64_t derive_seed(uint64_t root, uint64_t tag, uint64_t index = 0);

// Stream tags for derive_seed. One tag per independent consumer.
namespace seed_tag {
inline constexpr uint64_t kSplit = 1;
inline constexpr uint64_t kInit = 2;
inline constexpr uint64_t kRollout = 3;
inline constexpr uint64_t kShuffle = 4;
inline constexpr uint64_t kEval = 5;
}  // namespace seed_tag

}  // namespace asknav
