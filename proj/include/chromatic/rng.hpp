#ifndef CHROMATIC_RNG_HPP
#define CHROMATIC_RNG_HPP

#include <cstdint>

namespace chromatic {

// SplitMix64: output i is a fixed 64-bit mix of seed + (i+1)*0x9E3779B97F4A7C15.
// Counter-based, so identical (seed, index) gives identical output on every
// platform; this is the reproducibility contract all sampling rests on.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0,1) with 53 random bits.
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  private:
    std::uint64_t state_;
};

}  // namespace chromatic

#endif
