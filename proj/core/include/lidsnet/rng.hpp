#pragma once

#include <cstdint>

namespace lidsnet {

// Deterministic splitmix64 stream. Used for every random draw in the
// project (weight init, sampling, dropout) so that runs are reproducible
// across platforms for a given seed; std::<random> distributions are
// implementation-defined and would break that.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, 1) with 53 bits of precision
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // uniform integer in [0, bound) without modulo bias
  std::uint64_t bounded(std::uint64_t bound) {
    std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      std::uint64_t r = next_u64();
      if (r >= threshold) return r % bound;
    }
  }

  // Independent stream derived from this seed and a stream id. Forking
  // never advances the parent state, so per-sample streams are stable
  // regardless of evaluation order (and hence of thread count).
  Rng fork(std::uint64_t stream) const {
    Rng r(state_ ^ (0x9e3779b97f4a7c15ULL + stream * 0xd1b54a32d192ed03ULL));
    r.next_u64();
    return r;
  }

 private:
  std::uint64_t state_;
};

}  // namespace lidsnet
