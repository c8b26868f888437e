#ifndef UNICRIT_RNG_HPP
#define UNICRIT_RNG_HPP

#include <complex>
#include <cstdint>

namespace unicrit {

// Small counter-style generator (splitmix64). Used instead of <random>
// engines/distributions so that seeded runs produce identical streams on
// every platform; std::uniform_real_distribution makes no such promise.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1).
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Uniform modulus in [0, max_modulus) times uniform phase.
    std::complex<double> next_complex(double max_modulus = 1.0) {
        const double r = max_modulus * next_double();
        const double phi = 6.283185307179586476925286766559 * next_double();
        return std::polar(r, phi);
    }

    std::complex<double> next_unimodular() {
        return std::polar(1.0, 6.283185307179586476925286766559 * next_double());
    }

    // Independent per-case stream: hash-mix the base seed with the case index.
    static SplitMix64 derive(std::uint64_t base_seed, std::uint64_t case_index) {
        SplitMix64 mixer(base_seed * 0x9E3779B97F4A7C15ULL + case_index);
        return SplitMix64(mixer.next_u64());
    }

  private:
    std::uint64_t state_;
};

}  // namespace unicrit

#endif
