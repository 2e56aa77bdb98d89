// SplitMix64 (Steele, Lea & Flood 2014; public-domain reference by Vigna).
// A counter-based generator: output i is a fixed mix of seed + (i+1)*gamma,
// so any position in the stream is reproducible from the seed alone.
#pragma once

#include <cstdint>

namespace wafom {

class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += kGamma;
        return mix(state_);
    }

    // The index-th output of a stream started at `seed`, without a stream object.
    static std::uint64_t at(std::uint64_t seed, std::uint64_t index) {
        return mix(seed + (index + 1) * kGamma);
    }

  private:
    static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

} // namespace wafom
