#ifndef SUBBAND_CASCADE_HPP
#define SUBBAND_CASCADE_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "subband/filter.hpp"
#include "subband/signal.hpp"

namespace subband {

/// Detail-coefficient convention.
///
/// `cascade_difference`: level-z detail is the raw input sample minus the
/// z-fold filtered-and-downsampled value, d_z[y] = s[2^z y] - a_z[y].
///
/// `per_stage`: detail is taken against the previous approximation before
/// its own downsampling, d_z[y] = a_{z-1}[2y] - a_z[y].
enum class DetailMode {
    cascade_difference,
    per_stage,
};

struct DecompositionResult {
    // details[z-1] and approximations[z-1] hold level z; level z has
    // exactly n / 2^z entries (circular boundaries keep lengths exact).
    std::vector<std::vector<double>> details;
    std::vector<std::vector<double>> approximations;
    std::vector<std::size_t> scale_labels; // n / 2^z
    DetailMode mode = DetailMode::cascade_difference;
};

/// Circular convolution with causal indexing followed by retention of the
/// even-indexed samples. Input length must be even and >= 2.
Signal lowpass_downsample(const Signal& s, const FirFilter& f);

/// Iterated lowpass-downsample pyramid with per-level details.
/// Requires z_max >= 1 and n / 2^z_max >= 1.
DecompositionResult decompose(const Signal& s, const FirFilter& f, int z_max,
                              DetailMode mode = DetailMode::cascade_difference);

/// Literal enumeration of the level-z detail at position y: the sum over
/// all index tuples (i_1..i_z) of prod_k f[i_k] * s[(2^z y - sum_k 2^(k-1) i_k) mod n],
/// subtracted from s[2^z y]. Small instances only (taps^z <= 1e6).
double direct_detail_oracle(const Signal& s, const FirFilter& f, int z, std::size_t y);

/// Difference between the clean and perturbed level-z details, evaluated by
/// expanding prod(f+eps) - prod(f) over index tuples and noise subsets.
/// `eps` must have one entry per tap. Same budget as direct_detail_oracle.
double noise_difference_oracle(const Signal& s, const FirFilter& f,
                               std::span<const double> eps, int z, std::size_t y);

} // namespace subband

#endif
