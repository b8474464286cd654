#ifndef STEMFORGE_RNG_HPP
#define STEMFORGE_RNG_HPP

#include <cstdint>

namespace stemforge {

// SplitMix64 stream. Self-contained so that seeded runs produce identical
// results on every platform and standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform value in [0, bound); bound must be positive.
    std::uint32_t below(std::uint32_t bound) {
        return static_cast<std::uint32_t>(
            (static_cast<unsigned __int128>(next()) * bound) >> 64);
    }

    // Uniform double in [0, 1).
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Independent stream for item `index` of a seeded family.
    static std::uint64_t derive(std::uint64_t seed, std::uint64_t index) {
        Rng r(seed ^ (0xA0761D6478BD642FULL + index * 0xE7037ED1A0B428DBULL));
        return r.next();
    }

private:
    std::uint64_t state_;
};

} // namespace stemforge

#endif
