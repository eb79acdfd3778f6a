#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace rcnn {

// Counter-based random numbers built on the Philox4x32-10 bijection
// (Salmon et al., "Parallel random numbers: as easy as 1, 2, 3").
// Every draw is a pure function of (key, counter), so streams can be
// evaluated in any order, from any thread, with identical results.

struct PhiloxBlock {
    std::array<uint32_t, 4> w;
};

inline PhiloxBlock philox4x32(uint64_t key, uint64_t ctr_hi, uint64_t ctr_lo) {
    uint32_t c0 = static_cast<uint32_t>(ctr_lo);
    uint32_t c1 = static_cast<uint32_t>(ctr_lo >> 32);
    uint32_t c2 = static_cast<uint32_t>(ctr_hi);
    uint32_t c3 = static_cast<uint32_t>(ctr_hi >> 32);
    uint32_t k0 = static_cast<uint32_t>(key);
    uint32_t k1 = static_cast<uint32_t>(key >> 32);
    for (int round = 0; round < 10; ++round) {
        uint64_t p0 = 0xD2511F53ull * c0;
        uint64_t p1 = 0xCD9E8D57ull * c2;
        uint32_t hi0 = static_cast<uint32_t>(p0 >> 32), lo0 = static_cast<uint32_t>(p0);
        uint32_t hi1 = static_cast<uint32_t>(p1 >> 32), lo1 = static_cast<uint32_t>(p1);
        c0 = hi1 ^ c1 ^ k0;
        c1 = lo1;
        c2 = hi0 ^ c3 ^ k1;
        c3 = lo0;
        k0 += 0x9E3779B9u;
        k1 += 0xBB67AE85u;
    }
    return PhiloxBlock{{c0, c1, c2, c3}};
}

/// 53-bit uniform in [0,1) from two 32-bit words.
inline double u01(uint32_t a, uint32_t b) {
    uint64_t bits = (static_cast<uint64_t>(a) << 32) | b;
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

/// One uniform double addressed directly by (key, hi, lo) counters.
inline double uniform_at(uint64_t key, uint64_t ctr_hi, uint64_t ctr_lo) {
    PhiloxBlock blk = philox4x32(key, ctr_hi, ctr_lo);
    return u01(blk.w[0], blk.w[1]);
}

/// Derives an independent 64-bit sub-key, e.g. one per pulse or per sub-band.
inline uint64_t derive_key(uint64_t key, uint64_t a, uint64_t b = 0) {
    PhiloxBlock blk = philox4x32(key, a, b);
    return (static_cast<uint64_t>(blk.w[0]) << 32) | blk.w[1];
}

/// Sequential stream view over a (key, stream) pair. Draw order within one
/// stream is significant; distinct streams are independent.
class CounterRng {
public:
    explicit CounterRng(uint64_t key, uint64_t stream = 0) : key_(key), stream_(stream) {}

    uint32_t next_u32() {
        if (lane_ == 4) {
            block_ = philox4x32(key_, stream_, index_++);
            lane_ = 0;
        }
        return block_.w[lane_++];
    }

    double uniform() {
        uint32_t a = next_u32();
        uint32_t b = next_u32();
        return u01(a, b);
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Standard normal via Box-Muller; second deviate is cached.
    double normal() {
        if (have_cached_) {
            have_cached_ = false;
            return cached_;
        }
        double u1 = uniform();
        if (u1 <= 0.0)
            u1 = 0x1.0p-53;
        double u2 = uniform();
        double radius = std::sqrt(-2.0 * std::log(u1));
        double angle = 2.0 * M_PI * u2;
        cached_ = radius * std::sin(angle);
        have_cached_ = true;
        return radius * std::cos(angle);
    }

    /// Uniform integer in [0, n).
    uint32_t below(uint32_t n) {
        return static_cast<uint32_t>(uniform() * static_cast<double>(n)) % n;
    }

private:
    uint64_t key_;
    uint64_t stream_;
    uint64_t index_ = 0;
    PhiloxBlock block_{};
    int lane_ = 4;
    double cached_ = 0.0;
    bool have_cached_ = false;
};

}  // namespace rcnn
