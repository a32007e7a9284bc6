#include "subband/filter.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace subband {

namespace {

double sinc(double x) {
    if (x == 0.0) return 1.0;
    const double px = std::numbers::pi * x;
    return std::sin(px) / px;
}

// Rescale to unit sum. No-op when the sum is already 1 within a few ulps
// per tap, so normalizing twice is bit-identical to normalizing once.
void normalize_unit_sum(std::vector<double>& c) {
    double sum = 0.0;
    for (double v : c) sum += v;
    if (sum == 0.0) throw std::invalid_argument("filter: zero-sum coefficients cannot be normalized");
    const double tol = 4.0 * std::numeric_limits<double>::epsilon() * static_cast<double>(c.size());
    if (std::abs(sum - 1.0) <= tol) return;
    for (double& v : c) v /= sum;
}

} // namespace

FirFilter design_halfband_lowpass(int order, double cutoff) {
    if (order < 2 || order % 2 != 0)
        throw std::invalid_argument("design_halfband_lowpass: order must be even and >= 2");
    if (!(cutoff > 0.0 && cutoff < 1.0))
        throw std::invalid_argument("design_halfband_lowpass: cutoff must be in (0, 1)");

    const int taps = order + 1;
    std::vector<double> c(static_cast<std::size_t>(taps));
    const int half = order / 2;
    // Compute one half and mirror so symmetry is exact in floating point.
    for (int k = 0; k <= half; ++k) {
        const double m = static_cast<double>(k - half);
        const double ideal = cutoff * sinc(cutoff * m);
        const double w = 0.54 - 0.46 * std::cos(2.0 * std::numbers::pi * k / order);
        const double v = ideal * w;
        c[static_cast<std::size_t>(k)] = v;
        c[static_cast<std::size_t>(order - k)] = v;
    }
    normalize_unit_sum(c);

    FirFilter f;
    f.coefficients = std::move(c);
    f.order = order;
    f.cutoff = cutoff;
    f.dc_gain = filter_stats(f).sum;
    return f;
}

FirFilter from_coefficients(std::vector<double> raw, bool normalize) {
    if (raw.empty()) throw std::invalid_argument("from_coefficients: empty coefficient list");
    for (double v : raw)
        if (!std::isfinite(v)) throw std::invalid_argument("from_coefficients: non-finite coefficient");
    if (normalize) normalize_unit_sum(raw);

    FirFilter f;
    f.order = static_cast<int>(raw.size()) - 1;
    f.coefficients = std::move(raw);
    f.cutoff = std::numeric_limits<double>::quiet_NaN();
    f.dc_gain = filter_stats(f).sum;
    return f;
}

FilterStats filter_stats(const FirFilter& f) {
    if (f.coefficients.empty()) throw std::invalid_argument("filter_stats: empty filter");
    FilterStats st;
    st.min = st.max = f.coefficients.front();
    st.min_abs = st.max_abs = std::abs(f.coefficients.front());
    double sum = 0.0;
    double sumsq = 0.0;
    for (double v : f.coefficients) {
        st.min = std::min(st.min, v);
        st.max = std::max(st.max, v);
        st.min_abs = std::min(st.min_abs, std::abs(v));
        st.max_abs = std::max(st.max_abs, std::abs(v));
        sum += v;
        sumsq += v * v;
    }
    st.sum = sum;
    st.l2_norm = std::sqrt(sumsq);
    return st;
}

} // namespace subband
