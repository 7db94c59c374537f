#pragma once

#include <cstdint>
#include <random>

namespace sglde {

// SplitMix64 finalizer (Steele, Lea, Flood 2014); used to derive substreams.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// (master, stream) pair addressing one reproducible random stream.
//
// Mapping contract: the generator is std::mt19937_64 seeded from
// std::seed_seq{master_lo, master_hi, stream_lo, stream_hi}. Substreams are
// derived by folding indices into `stream` through splitmix64, so e.g. the
// stream of (EM iteration, gap, bridge) is fixed regardless of scheduling.
// Distinct (master, stream) pairs give statistically independent streams at
// the level of the generator's seeding guarantee.
struct RngSeed {
    std::uint64_t master = 0;
    std::uint64_t stream = 0;

    RngSeed with(std::uint64_t a) const {
        return RngSeed{master, splitmix64(stream ^ splitmix64(a))};
    }
    RngSeed with(std::uint64_t a, std::uint64_t b) const { return with(a).with(b); }
    RngSeed with(std::uint64_t a, std::uint64_t b, std::uint64_t c) const {
        return with(a).with(b).with(c);
    }
};

// Gaussian sampler: mt19937_64 + Marsaglia polar transform. The polar method
// is the classic ziggurat-equivalent; it uses only sqrt/log so the output is
// a deterministic function of the engine stream (bitwise stable within one
// build, reproducible across platforms up to libm ulp differences).
class NormalSampler {
public:
    explicit NormalSampler(RngSeed seed) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed.master),
                          static_cast<std::uint32_t>(seed.master >> 32),
                          static_cast<std::uint32_t>(seed.stream),
                          static_cast<std::uint32_t>(seed.stream >> 32)};
        engine_.seed(seq);
    }

    // Uniform in [0, 1), 53-bit resolution.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // Standard normal deviate.
    double operator()() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * uniform() - 1.0;
            v = 2.0 * uniform() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double f = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * f;
        have_spare_ = true;
        return u * f;
    }

private:
    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace sglde
