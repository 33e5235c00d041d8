#ifndef MIXMULT_RNG_HPP
#define MIXMULT_RNG_HPP

#include <cstdint>

namespace mixmult {

// Deterministic splittable generator (splitmix64). We avoid <random>
// distributions: their output is implementation-defined, and reports must be
// byte-identical across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Unbiased draw from [0, n). n must be positive.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = n * (UINT64_MAX / n);
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % n;
    }

    // Child generator with an independent stream; deterministic in (state, tag).
    Rng fork(std::uint64_t tag) {
        std::uint64_t mixed = next() ^ (tag * 0xd6e8feb86659fd93ULL + 0x2545f4914f6cdd1dULL);
        return Rng(mixed);
    }

    std::uint64_t state() const { return state_; }

private:
    std::uint64_t state_;
};

} // namespace mixmult

#endif
