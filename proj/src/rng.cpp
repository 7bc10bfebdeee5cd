#include "asknav/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace asknav {

uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

uint64_t derive_seed(uint64_t root, uint64_t tag, uint64_t index) {
  uint64_t h = splitmix64(root ^ splitmix64(tag));
  return splitmix64(h ^ splitmix64(index + 0x0123456789abcdefULL));
}

void Rng::reseed(uint64_t seed) {
  // PCG32 seeding: stream selector from the seed as well, always odd.
  inc_ = (splitmix64(seed ^ 0xda3e39cb94b95bdbULL) << 1u) | 1u;
  state_ = 0;
  next_u32();
  state_ += splitmix64(seed);
  next_u32();
}

uint32_t Rng::next_u32() {
  uint64_t old = state_;
  state_ = old * 6364136223846793005ULL + inc_;
  uint32_t xorshifted = static_cast<uint32_t>(((old >> 18u) ^ old) >> 27u);
  uint32_t rot = static_cast<uint32_t>(old >> 59u);
  return (xorshifted >> rot) | (xorshifted << ((32u - rot) & 31u));
}

uint64_t Rng::next_u64() {
  uint64_t hi = next_u32();
  uint64_t lo = next_u32();
  return (hi << 32) | lo;
}

int Rng::uniform_int(int lo, int hi) {
  if (lo > hi) throw std::invalid_argument("uniform_int: empty range");
  uint64_t span = static_cast<uint64_t>(hi) - static_cast<uint64_t>(lo) + 1;
  if (span == 0) return lo + static_cast<int>(next_u64());  // full 64-bit range
  // Rejection sampling over the largest multiple of span below 2^64.
  uint64_t limit = UINT64_MAX - (UINT64_MAX % span + 1) % span;
  uint64_t draw;
  do {
    draw = next_u64();
  } while (draw > limit);
  return lo + static_cast<int>(draw % span);
}

double Rng::uniform_real() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::uniform_real(double lo, double hi) {
  return lo + (hi - lo) * uniform_real();
}

bool Rng::bernoulli(double p) {
  return uniform_real() < p;
}

int Rng::categorical(const std::vector<double>& probs) {
  if (probs.empty()) throw std::invalid_argument("categorical: empty");
  double total = 0;
  for (double p : probs) total += p;
  double u = uniform_real() * total;
  double acc = 0;
  for (size_t i = 0; i < probs.size(); ++i) {
    acc += probs[i];
    if (u < acc) return static_cast<int>(i);
  }
  return static_cast<int>(probs.size()) - 1;  // u landed on the top edge
}

}  // namespace asknav
