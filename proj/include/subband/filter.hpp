#ifndef SUBBAND_FILTER_HPP
#define SUBBAND_FILTER_HPP

#include <cstddef>
#include <vector>

namespace subband {

/// FIR filter as an ordered tap vector plus design metadata.
///
/// `order` is taps-1. `cutoff` is the design cutoff as a fraction of
/// Nyquist, NaN for filters built from raw coefficients. `dc_gain` is the
/// coefficient sum at construction time.
struct FirFilter {
    std::vector<double> coefficients;
    int order = 0;
    double cutoff = 0.0; // NaN when not a designed filter
    double dc_gain = 0.0;

    std::size_t taps() const { return coefficients.size(); }
};

struct FilterStats {
    double min = 0.0;
    double max = 0.0;
    double min_abs = 0.0;
    double max_abs = 0.0;
    double sum = 0.0;
    double l2_norm = 0.0;
};

/// Windowed-sinc low-pass design: ideal impulse response times a
/// raised-cosine (Hamming) window, normalized to unit coefficient sum.
/// `order` must be even and >= 2 so the filter has a center tap;
/// `cutoff` is a fraction of Nyquist in (0, 1).
FirFilter design_halfband_lowpass(int order, double cutoff);

/// Wrap raw coefficients, optionally rescaling to unit sum.
/// Rejects empty or non-finite input, and zero-sum input when normalizing.
FirFilter from_coefficients(std::vector<double> raw, bool normalize);

/// Exact elementwise statistics over the taps.
FilterStats filter_stats(const FirFilter& f);

} // namespace subband

#endif
