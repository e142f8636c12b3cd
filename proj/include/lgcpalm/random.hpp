#pragma once

#include <cstdint>

namespace lgcp {

/// Purpose tags for deriving independent substreams from one master seed.
/// Field draws, Poisson counts, uniform placement and thinning never share
/// a stream, so replications can be generated independently and in any
/// order while staying bitwise reproducible.
enum class StreamKind : std::uint64_t {
    Field = 1,
    Counts = 2,
    Placement = 3,
    Thinning = 4,
    Generic = 5,
};

/// splitmix64 mixing step (Steele, Lea, Flood 2014).
std::uint64_t splitmix64(std::uint64_t& state);

/// Derive the seed for substream (kind, index) of a master seed by chaining
/// splitmix64 over the three words.
std::uint64_t substream_seed(std::uint64_t master, StreamKind kind, std::uint64_t index);

/// xoshiro256++ (Blackman, Vigna 2019), seeded via splitmix64 expansion.
/// All floating-point conversions are done explicitly here so that streams
/// are identical across platforms and standard libraries.
class Rng {
  public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t next_u64();

    /// Uniform on [0, 1): 53 random mantissa bits.
    double uniform01();

    /// Uniform on (0, 1]; safe to pass through log.
    double uniform01_open_low();

    /// Standard normal by the Box-Muller transform (two uniforms per call).
    double normal();

    /// Poisson sample. Mean <= 30 uses Knuth's product-of-uniforms method;
    /// larger means split recursively using Poisson additivity, staying exact.
    long poisson(double mean);

  private:
    std::uint64_t state_[4];
};

} // namespace lgcp
