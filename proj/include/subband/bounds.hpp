#ifndef SUBBAND_BOUNDS_HPP
#define SUBBAND_BOUNDS_HPP

#include <cstddef>
#include <optional>

#include "subband/filter.hpp"

namespace subband {

/// Per-coefficient bounds on the expected squared detail, plus dB forms of
/// the level sums. The primary dB form counts the n/2^z coefficients at the
/// level; the alternate uses the filter tap count in place of the signal
/// length (both normalizations are reported because the source formulas
/// overload the symbol N).
struct NumeratorBounds {
    double lo = 0.0;
    double hi = 0.0;
    double db_lo = 0.0;
    double db_hi = 0.0;
    double db_lo_tapcount = 0.0;
    double db_hi_tapcount = 0.0;
};

struct F1Bounds {
    double lo = 0.0;
    double hi = 0.0;
};

struct NoisePowerApprox {
    double db = 0.0;
    bool low_snr_warning = false; // target below the validity guard (50 dB)
    bool used_exact_f1 = false;
};

struct SnrUpperBound {
    double db = 0.0;
    bool degenerate = false;       // zero tap: bound is +inf
    bool assumptions_violated = false; // negative taps present
    double literal_last_term = 0.0;    // -ln(min|f|), the bound's last term as printed
};

struct BoundsReport {
    int z = 0;
    NumeratorBounds numerator;
    double f1_lo = 0.0;
    double f1_hi = 0.0;
    std::optional<double> f1_exact;
    std::optional<double> f1_alternate_constrained; // strict-constraint reading, when affordable
    NoisePowerApprox noise_power;
    SnrUpperBound snr_upper;
    bool assumptions_violated = false;
};

/// Bounds for the per-coefficient expected squared detail of a unit-sum
/// filter: lo = max(0, 1 - 2 max f + min f), hi = 1 - 2 min f + max f.
NumeratorBounds numerator_bounds(const FirFilter& f, int z, std::size_t n);

/// Filter-only factor of the leading noise term, by literal enumeration:
/// for each excluded scale j and shared excluded index m, all coefficient
/// products of length 2(z-1) in which one index of the second tuple is
/// fixed (circularly) by the equal-weighted-index-sum constraint; the total
/// is scaled by taps/2^z. At z = 1 the pair collapses onto the single
/// shared coefficient. Budget: z * taps^(2z-2) <= 1e8 terms.
double f1_bruteforce(const FirFilter& f, int z);

/// Same structure under the strict reading that keeps the weighted-sum
/// constraint as an exact filter over free tuple pairs (no circular fix).
/// Reported as metadata next to f1_bruteforce. Budget: taps^(2z) <= 1e8.
double f1_alternate_constrained(const FirFilter& f, int z);

/// taps^2 * z * 2^-z * [min|f|, max f].
F1Bounds f1_bounds(const FirFilter& f, int z);

/// Leading-order noise power -SNR_I - 10 log10(f1), using the exact f1
/// when affordable and the geometric mean of its bounds otherwise.
NoisePowerApprox noise_power_approx(const FirFilter& f, double snr_in_db, int z);

/// Upper bound on the level-z output SNR:
/// SNR_I - 10 log10(taps) + 10 log10(1 - 2 min f + max f) - 10 log10(z)
/// - 10 log10(min|f|). Linear in SNR_I with slope one.
SnrUpperBound snr_upper_bound(const FirFilter& f, int z, double snr_in_db, std::size_t n);

BoundsReport bounds_report(const FirFilter& f, int z, std::size_t n, double snr_in_db);

} // namespace subband

#endif
