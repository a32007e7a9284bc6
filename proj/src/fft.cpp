#include "subband/fft.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include <boost/math/distributions/students_t.hpp>

#include "subband/errors.hpp"
#include "subband/signal.hpp"

namespace subband {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Keep bins strictly inside the lower half-band, zero the rest.
bool halfband_pass(std::size_t k, std::size_t n) {
    const std::size_t dist = std::min(k, n - k);
    return dist < n / 4;
}

} // namespace

std::vector<Cplx<double>> make_twiddles_double(std::size_t n) {
    std::vector<Cplx<double>> tw(n / 2);
    for (std::size_t k = 0; k < n / 2; ++k) {
        DD c, s;
        dd_sincos_turn(k, n, c, s);
        tw[k] = {c.to_double(), -s.to_double()};
    }
    return tw;
}

std::vector<Cplx<DD>> make_twiddles_dd(std::size_t n) {
    std::vector<Cplx<DD>> tw(n / 2);
    for (std::size_t k = 0; k < n / 2; ++k) {
        DD c, s;
        dd_sincos_turn(k, n, c, s);
        tw[k] = {c, -s};
    }
    return tw;
}

FftErrorRecord fft_roundoff_snr(std::size_t size, int trials, std::uint64_t seed, bool apply_mask) {
    if (!is_power_of_two(size) || size < (1u << 4) || size > (1u << 20))
        throw std::invalid_argument("fft_roundoff_snr: size must be a power of two in [2^4, 2^20]");
    if (trials < 10) throw std::invalid_argument("fft_roundoff_snr: trials must be >= 10");

    const auto tw_d = make_twiddles_double(size);
    const auto tw_dd = make_twiddles_dd(size);

    FftErrorRecord rec;
    rec.size = size;
    rec.trials = trials;
    rec.per_trial_snr_db.reserve(static_cast<std::size_t>(trials));

    for (int t = 0; t < trials; ++t) {
        const Signal x = generate_white_noise(size, derive_seed(seed, 3, size, static_cast<std::uint64_t>(t)));

        std::vector<Cplx<double>> work(size);
        std::vector<Cplx<DD>> ref(size);
        for (std::size_t i = 0; i < size; ++i) {
            work[i] = {x.samples[i], 0.0};
            ref[i] = {DD(x.samples[i]), DD(0.0)};
        }

        fft_radix2(work, tw_d, false);
        fft_radix2(ref, tw_dd, false);
        if (apply_mask) {
            for (std::size_t k = 0; k < size; ++k) {
                if (!halfband_pass(k, size)) {
                    work[k] = {0.0, 0.0};
                    ref[k] = {DD(0.0), DD(0.0)};
                }
            }
        }
        fft_radix2(work, tw_d, true);
        fft_radix2(ref, tw_dd, true);

        DD refpow{0.0}, errpow{0.0};
        for (std::size_t i = 0; i < size; ++i) {
            refpow += ref[i].re * ref[i].re + ref[i].im * ref[i].im;
            const DD dre = DD(work[i].re) - ref[i].re;
            const DD dim = DD(work[i].im) - ref[i].im;
            errpow += dre * dre + dim * dim;
        }
        if (errpow.to_double() == 0.0) {
            rec.per_trial_snr_db.push_back(kInf);
        } else {
            rec.per_trial_snr_db.push_back(10.0 * std::log10((refpow / errpow).to_double()));
        }
    }

    double sum = 0.0;
    std::size_t m = 0;
    for (double v : rec.per_trial_snr_db)
        if (std::isfinite(v)) {
            sum += v;
            ++m;
        }
    if (m == 0) {
        rec.snr_db = kInf;
        rec.ci95 = 0.0;
        return rec;
    }
    rec.snr_db = sum / static_cast<double>(m);
    if (m > 1) {
        double var = 0.0;
        for (double v : rec.per_trial_snr_db)
            if (std::isfinite(v)) var += (v - rec.snr_db) * (v - rec.snr_db);
        var /= static_cast<double>(m - 1);
        boost::math::students_t dist(static_cast<double>(m) - 1.0);
        rec.ci95 = boost::math::quantile(dist, 0.975) * std::sqrt(var / static_cast<double>(m));
    }
    return rec;
}

FftDecayFit fft_decay_fit(const std::vector<FftErrorRecord>& records) {
    std::size_t m = 0;
    for (const auto& r : records)
        if (std::isfinite(r.snr_db)) ++m;
    if (m < 4) throw AnalysisError("fft_decay_fit: need >= 4 sizes");

    double xbar = 0.0, ybar = 0.0;
    for (const auto& r : records) {
        if (!std::isfinite(r.snr_db)) continue;
        xbar += std::log2(static_cast<double>(r.size));
        ybar += r.snr_db;
    }
    xbar /= static_cast<double>(m);
    ybar /= static_cast<double>(m);
    double sxx = 0.0, sxy = 0.0;
    for (const auto& r : records) {
        if (!std::isfinite(r.snr_db)) continue;
        const double x = std::log2(static_cast<double>(r.size));
        sxx += (x - xbar) * (x - xbar);
        sxy += (x - xbar) * (r.snr_db - ybar);
    }
    FftDecayFit fit;
    fit.db_per_octave = sxy / sxx;
    fit.bits_per_octave = fit.db_per_octave * std::log2(10.0) / 10.0;
    return fit;
}

} // namespace subband
