#ifndef SUBBAND_PERTURBATION_HPP
#define SUBBAND_PERTURBATION_HPP

#include <cstdint>
#include <limits>

#include "subband/filter.hpp"

namespace subband {

/// How the coefficient-noise standard deviation is derived from a target
/// input SNR.
///
/// `filter_power`: lambda^2 = sum(f^2) * 10^(-SNR/10) / taps, so the
/// expected total noise power across the taps matches the filter power at
/// the target ratio.
///
/// `paper_literal`: lambda^2 = 10^(-SNR/10), treating the signal-norm
/// factor as 1 for unit-power white noise.
enum class CalibrationMode {
    filter_power,
    paper_literal,
};

struct PerturbationSpec {
    // +infinity is the explicit no-noise sentinel.
    double snr_in_db = std::numeric_limits<double>::infinity();
    std::uint64_t seed = 0;
    CalibrationMode mode = CalibrationMode::filter_power;
};

/// Noise standard deviation for the target input SNR.
double calibrate_lambda(const FirFilter& f, const PerturbationSpec& spec);

/// Add i.i.d. Gaussian(0, lambda) noise to every tap. The result is not
/// re-normalized; identical (filter, spec) inputs give identical outputs.
FirFilter perturb(const FirFilter& f, const PerturbationSpec& spec);

} // namespace subband

#endif
