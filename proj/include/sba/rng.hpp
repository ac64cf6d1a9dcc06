#ifndef SBA_RNG_HPP
#define SBA_RNG_HPP

#include <cstdint>
#include <random>

namespace sba {

// splitmix64 finalizer; also the seed-mixing primitive for stream derivation.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Derives an independent substream seed from (seed, tag). Used everywhere a
// deterministic parallel stream split is needed: observation index inside a
// sampler, grid index inside cross-validation, (point, trial) inside the
// experiment driver.
inline std::uint64_t mix64(std::uint64_t seed, std::uint64_t tag) {
    return splitmix64(splitmix64(seed) ^ splitmix64(tag));
}

// Seedable generator with a fully specified output path: the mt19937_64
// engine is defined bit-for-bit by the standard and the conversions below
// avoid std::*_distribution (whose output is implementation-defined), so
// identical seeds give identical draws on every platform.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    // Uniform on [0, 1) with 53 random bits.
    double next_double() {
        return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    }

    // Uniform on {0, ..., n-1}, unbiased via rejection.
    std::uint64_t next_index(std::uint64_t n) {
        const std::uint64_t rem = (~std::uint64_t{0} % n + 1) % n;
        const std::uint64_t bound = ~std::uint64_t{0} - rem;
        std::uint64_t x;
        do {
            x = eng_();
        } while (x > bound);
        return x % n;
    }

    bool bernoulli(double p) { return next_double() < p; }

  private:
    std::mt19937_64 eng_;
};

}  // namespace sba

#endif
