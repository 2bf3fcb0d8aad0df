#pragma once

#include <cstdint>
#include <random>

namespace balance {

// Mixer used to derive independent per-trial sub-seeds from a master seed.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t stream) {
    return splitmix64(seed ^ splitmix64(stream + 0x6a09e667f3bcc909ULL));
}

// mt19937_64 with hand-rolled distributions. The standard pins the raw
// mt19937_64 output sequence but not the library distributions, so uniform
// index / real / bernoulli are implemented here to keep runs reproducible
// across platforms and standard libraries.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    static constexpr const char* algorithm_id() { return "mt19937_64+rejection"; }

    std::uint64_t next_u64() { return gen_(); }

    // Uniform integer in [0, n). Rejection sampling, no modulo bias.
    std::size_t index(std::size_t n) {
        if (n <= 1) return 0;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v;
        do {
            v = gen_();
        } while (v >= limit);
        return static_cast<std::size_t>(v % n);
    }

    // Uniform double in [0, 1) with 53 random bits.
    double real() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return real() < p; }

  private:
    std::mt19937_64 gen_;
};

}  // namespace balance
