#pragma once

#include <cstdint>

namespace hfnoise {

// Deterministic random stream keyed by (seed, stream_id, substream).
// Each (key triple) yields an independent xoshiro256++ sequence, so paths
// can be generated in any order, on any number of threads, with identical
// output. All samplers below consume the stream in a fixed draw order.
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t stream_id = 0, std::uint64_t substream = 0);

    std::uint64_t next_u64();

    // Uniform on the open interval (0, 1); 53-bit resolution.
    double u01();

    // Standard normal via Box-Muller; the sine partner is cached.
    double normal();

    // Exponential with the given mean.
    double exponential(double mean);

    // Gamma(shape, scale), Marsaglia-Tsang squeeze with the shape<1 boost.
    double gamma(double shape, double scale);

private:
    std::uint64_t s_[4];
    double cached_normal_ = 0.0;
    bool has_cached_normal_ = false;
};

}  // namespace hfnoise
