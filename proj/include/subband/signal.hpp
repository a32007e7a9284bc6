#ifndef SUBBAND_SIGNAL_HPP
#define SUBBAND_SIGNAL_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

namespace subband {

/// Real time series. The decomposition operations require a power-of-two
/// length; the factories below enforce it.
struct Signal {
    std::vector<double> samples;

    std::size_t size() const { return samples.size(); }
};

constexpr bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

/// i.i.d. standard Gaussian samples from a deterministic generator.
/// `n` must be a power of two >= 4.
Signal generate_white_noise(std::size_t n, std::uint64_t seed);

/// Validate and wrap external samples (finite, power-of-two length >= 4).
Signal signal_from_samples(std::vector<double> samples);

double mean_power(const Signal& s);

/// splitmix64-style mixing of a master seed with up to three stream labels,
/// so per-trial substreams are deterministic and order independent.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b = 0, std::uint64_t c = 0);

} // namespace subband

#endif
