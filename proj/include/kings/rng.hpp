#ifndef KINGS_RNG_HPP_
#define KINGS_RNG_HPP_

#include <bit>
#include <cassert>
#include <cstdint>
#include <random>

namespace kings {

using Seed = std::uint64_t;

/// Derives a stream-independent sub-seed from (base, tag). splitmix64 finalizer,
/// so generators fed with derived seeds are reproducible yet uncorrelated.
constexpr Seed derive_seed(Seed base, std::uint64_t tag) {
    std::uint64_t z = base + 0x9E3779B97F4A7C15ull * (tag + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

/// Seeded random source. mt19937_64 is fully specified by the standard, and the
/// bounded draws below avoid std::uniform_int_distribution (whose output is
/// implementation-defined), so identical seeds give identical streams everywhere.
class Rng {
public:
    explicit Rng(Seed seed) : engine_(seed) {}

    std::uint64_t word() { return engine_(); }

    /// Fair coin. Consumes one buffered bit; a fresh word is drawn every 64 calls.
    bool coin() {
        if (bits_left_ == 0) {
            bit_buf_ = engine_();
            bits_left_ = 64;
        }
        bool b = bit_buf_ & 1u;
        bit_buf_ >>= 1;
        --bits_left_;
        return b;
    }

    /// Uniform draw from [0, bound). Mask-and-reject, unbiased. bound == 1
    /// consumes no entropy.
    std::uint64_t below(std::uint64_t bound) {
        assert(bound >= 1);
        if (bound == 1) return 0;
        const std::uint64_t mask = std::bit_ceil(bound) - 1;
        std::uint64_t draw;
        do {
            draw = engine_() & mask;
        } while (draw >= bound);
        return draw;
    }

private:
    std::mt19937_64 engine_;
    std::uint64_t bit_buf_ = 0;
    int bits_left_ = 0;
};

}  // namespace kings

#endif  // KINGS_RNG_HPP_
