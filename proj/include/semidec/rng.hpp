#ifndef SEMIDEC_RNG_HPP
#define SEMIDEC_RNG_HPP

#include <cstdint>

namespace semidec {

inline uint64_t mix64(uint64_t z)
{
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Counter-based generator: the stream is a pure function of (key, counter),
/// so parallel trials derive independent streams from (seed, trial index).
class Rng {
public:
    explicit Rng(uint64_t seed) : key_(mix64(seed)) {}

    static Rng derive(uint64_t seed, uint64_t a, uint64_t b = 0, uint64_t c = 0)
    {
        uint64_t k = mix64(seed);
        k = mix64(k ^ (a + 0x100000001b3ULL));
        k = mix64(k ^ (b + 0xcbf29ce484222325ULL));
        k = mix64(k ^ (c + 0x27d4eb2f165667c5ULL));
        Rng r(0);
        r.key_ = k;
        return r;
    }

    uint64_t next() { return mix64(key_ + (counter_++) * 0x9e3779b97f4a7c15ULL); }

    /// Uniform draw from [0, bound) by rejection; no modulo bias.
    uint64_t below(uint64_t bound)
    {
        uint64_t threshold = (0 - bound) % bound; // 2^64 mod bound
        for (;;) {
            uint64_t x = next();
            if (x >= threshold) return x % bound;
        }
    }

    bool coin() { return next() & 1; }

private:
    uint64_t key_;
    uint64_t counter_ = 0;
};

} // namespace semidec

#endif
