#pragma once

#include <cstdint>

namespace assoform {

// SplitMix64 (Steele, Lea, Flood 2014). Chosen over the std engines because
// its output is pure 64-bit arithmetic, identical on every platform and
// toolchain; all seeded sampling in the library must be bit-reproducible.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform-ish integer in [-bound, bound] via next() mod (2*bound + 1).
    // The modulo bias is irrelevant here; determinism is the requirement.
    long long bounded(long long bound) {
        const std::uint64_t span = 2 * static_cast<std::uint64_t>(bound) + 1;
        return static_cast<long long>(next() % span) - bound;
    }

  private:
    std::uint64_t state_;
};

}  // namespace assoform
