#include "hfnoise/rng.hpp"

#include <cmath>

namespace hfnoise {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
}

constexpr double kTwoPi = 6.283185307179586476925286766559;

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_id, std::uint64_t substream) {
    // Hash the key triple down to one word, then expand to the 256-bit state.
    std::uint64_t k = seed;
    (void)splitmix64(k);
    k ^= stream_id;
    (void)splitmix64(k);
    k ^= substream;
    s_[0] = splitmix64(k);
    s_[1] = splitmix64(k);
    s_[2] = splitmix64(k);
    s_[3] = splitmix64(k);
    // All-zero state is invalid for xoshiro; the mixer makes it unreachable
    // except by collision, guard anyway.
    if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) {
        s_[3] = 0x9e3779b97f4a7c15ULL;
    }
}

std::uint64_t RngStream::next_u64() {
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

double RngStream::u01() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double RngStream::normal() {
    if (has_cached_normal_) {
        has_cached_normal_ = false;
        return cached_normal_;
    }
    const double r = std::sqrt(-2.0 * std::log(u01()));
    const double theta = kTwoPi * u01();
    cached_normal_ = r * std::sin(theta);
    has_cached_normal_ = true;
    return r * std::cos(theta);
}

double RngStream::exponential(double mean) {
    return -mean * std::log(u01());
}

double RngStream::gamma(double shape, double scale) {
    if (shape < 1.0) {
        const double u = u01();
        return gamma(shape + 1.0, scale) * std::pow(u, 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x;
        double v;
        do {
            x = normal();
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = u01();
        if (u < 1.0 - 0.0331 * x * x * x * x) {
            return d * v * scale;
        }
        if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) {
            return d * v * scale;
        }
    }
}

}  // namespace hfnoise
