#ifndef EPI_RNG_HPP
#define EPI_RNG_HPP

#include <cstdint>
#include <random>

namespace epi {

/// splitmix64 finalizer; used to mix seed material into statistically
/// independent stream seeds.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t mix64(std::uint64_t a, std::uint64_t b) {
    return mix64(mix64(a) ^ b);
}

/// Stream tags keep the rng draws of unrelated concerns (graph build,
/// epidemic dynamics, edge checking, case reporting) on disjoint streams,
/// so changing one knob cannot perturb another stream's sequence.
enum class StreamTag : std::uint64_t {
    Graph = 1,
    Dynamics = 2,
    EdgeCheck = 3,
    Reporting = 4,
};

/// Deterministic per-(master seed, replica, concern) engine.
inline std::mt19937_64 make_stream(std::uint64_t master_seed, std::uint64_t replica,
                                   StreamTag tag, std::uint64_t extra = 0) {
    std::uint64_t s = mix64(master_seed, replica);
    s = mix64(s, static_cast<std::uint64_t>(tag));
    s = mix64(s, extra);
    return std::mt19937_64(s);
}

}  // namespace epi

#endif
