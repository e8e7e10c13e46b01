#pragma once

#include <cstdint>

namespace mdiqss {

// splitmix64 finaliser, used both as the generator step and to derive
// independent stream seeds from a master seed.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return x;
}

// Counter-based seed derivation: (master, stream, counter) -> seed.
// Rounds seeded this way are reproducible independent of worker count.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream,
                                    std::uint64_t counter) noexcept {
    std::uint64_t h = mix64(master ^ 0x9e3779b97f4a7c15ULL);
    h = mix64(h ^ stream * 0xd1342543de82ef95ULL);
    h = mix64(h ^ counter * 0x2545f4914f6cdd1dULL);
    return h;
}

// splitmix64 generator. All sampling in the library goes through this class
// so that transcripts never depend on standard-library distribution details.
class Rng {
public:
    explicit Rng(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t bits() noexcept {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix64(state_);
    }

    // uniform double in [0, 1) with 53-bit resolution
    double uniform() noexcept { return static_cast<double>(bits() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) noexcept { return uniform() < p; }

    int bit() noexcept { return static_cast<int>(bits() >> 63); }

    // uniform integer in [0, n)
    std::uint32_t below(std::uint32_t n) noexcept {
        return static_cast<std::uint32_t>(
            (static_cast<unsigned __int128>(bits()) * n) >> 64);
    }

private:
    std::uint64_t state_;
};

} // namespace mdiqss
