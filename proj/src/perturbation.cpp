#include "subband/perturbation.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace subband {

double calibrate_lambda(const FirFilter& f, const PerturbationSpec& spec) {
    if (f.coefficients.empty()) throw std::invalid_argument("calibrate_lambda: empty filter");
    if (std::isnan(spec.snr_in_db)) throw std::invalid_argument("calibrate_lambda: NaN target SNR");
    if (std::isinf(spec.snr_in_db)) {
        if (spec.snr_in_db > 0) return 0.0; // no-noise sentinel
        throw std::invalid_argument("calibrate_lambda: -inf target SNR");
    }
    const double atten = std::pow(10.0, -spec.snr_in_db / 10.0);
    if (spec.mode == CalibrationMode::paper_literal) return std::sqrt(atten);
    double sumsq = 0.0;
    for (double v : f.coefficients) sumsq += v * v;
    return std::sqrt(sumsq * atten / static_cast<double>(f.taps()));
}

FirFilter perturb(const FirFilter& f, const PerturbationSpec& spec) {
    const double lambda = calibrate_lambda(f, spec);
    FirFilter out = f;
    if (lambda == 0.0) return out;
    std::mt19937_64 rng(spec.seed);
    std::normal_distribution<double> gauss(0.0, lambda);
    for (double& v : out.coefficients) v += gauss(rng);
    out.dc_gain = filter_stats(out).sum;
    return out;
}

} // namespace subband
