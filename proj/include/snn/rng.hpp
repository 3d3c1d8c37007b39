#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

namespace snn {

// splitmix64 finalizer; used for seed derivation only, never as the
// simulation stream itself.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// Deterministic fan-out: every RNG stream in a run is keyed by the master
// seed plus an explicit path (stream tag, repeat, generation, individual, ...).
// Streams are independent of execution order, so any individual can be
// re-created in isolation.
inline std::uint64_t derive_seed(std::uint64_t master,
                                 std::initializer_list<std::uint64_t> path) {
    std::uint64_t s = mix64(master);
    for (std::uint64_t p : path) s = mix64(s ^ mix64(p + 0x51ED2701CB1B3279ull));
    return s;
}

// Stream tags for derive_seed paths.
namespace stream {
inline constexpr std::uint64_t topology   = 1;
inline constexpr std::uint64_t weights    = 2;
inline constexpr std::uint64_t genome     = 3;
inline constexpr std::uint64_t train_data = 4;
inline constexpr std::uint64_t test_data  = 5;
inline constexpr std::uint64_t mutation   = 6;
inline constexpr std::uint64_t kmeans     = 7;
} // namespace stream

// mt19937_64 with explicit output mappings. The engine's bit stream is
// pinned by the standard; the stdlib distributions are not, so the
// mappings below are spelled out here.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    // [0,1), 53-bit resolution
    double next_double() {
        return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    }

    // [lo,hi); degenerate lo==hi returns lo exactly
    double uniform(double lo, double hi) {
        return lo + (hi - lo) * next_double();
    }

    // unbiased integer in [0,n)
    std::size_t index(std::size_t n) {
        const std::uint64_t m = static_cast<std::uint64_t>(n);
        const std::uint64_t bound = UINT64_MAX - UINT64_MAX % m;
        std::uint64_t x;
        do {
            x = eng_();
        } while (x >= bound);
        return static_cast<std::size_t>(x % m);
    }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = index(i);
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::mt19937_64 eng_;
};

} // namespace snn
