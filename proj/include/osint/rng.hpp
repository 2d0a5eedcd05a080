#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace osint {

inline std::uint64_t splitmix64_next(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// mt19937_64 with hand-rolled distributions. std:: distribution objects are
/// implementation-defined, which would break the byte-identical trace
/// contract across standard libraries; the raw engine stream is portable.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform in [0,1) with 53 random bits.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    bool bernoulli(double p) { return uniform01() < p; }

    /// Uniform over {0, ..., n-1}. Modulo bias is irrelevant at the n used here.
    int uniform_int(int n) { return static_cast<int>(engine_() % static_cast<std::uint64_t>(n)); }

    /// Knuth's product method; arrival rates in this model are small.
    int poisson(double mean) {
        const double limit = std::exp(-mean);
        int k = 0;
        double p = 1.0;
        do {
            ++k;
            p *= uniform01();
        } while (p > limit);
        return k - 1;
    }

private:
    std::mt19937_64 engine_;
};

/// Substreams split from one master seed, in this fixed order: events,
/// decisions, interventions. Adding actors consumes more decision draws but
/// never perturbs the event stream.
struct RngStreams {
    Rng events;
    Rng decisions;
    Rng interventions;

    static RngStreams from_seed(std::uint64_t master_seed) {
        std::uint64_t s = master_seed;
        const std::uint64_t a = splitmix64_next(s);
        const std::uint64_t b = splitmix64_next(s);
        const std::uint64_t c = splitmix64_next(s);
        return RngStreams{Rng(a), Rng(b), Rng(c)};
    }
};

}  // namespace osint
