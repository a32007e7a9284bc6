#include "subband/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

#include <boost/math/distributions/students_t.hpp>

#include "subband/errors.hpp"
#include "subband/perturbation.hpp"

namespace subband {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double snr_db_from_powers(double sig, double noise) {
    if (noise == 0.0) return kInf;
    return 10.0 * std::log10(sig / noise);
}

struct Ols {
    double slope = 0.0, intercept = 0.0, r_squared = 0.0;
    double se_slope = 0.0, se_intercept = 0.0;
    std::size_t n = 0;
};

Ols ols(const std::vector<double>& x, const std::vector<double>& y) {
    Ols o;
    o.n = x.size();
    const double m = static_cast<double>(o.n);
    double xbar = 0.0, ybar = 0.0;
    for (std::size_t i = 0; i < o.n; ++i) { xbar += x[i]; ybar += y[i]; }
    xbar /= m;
    ybar /= m;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < o.n; ++i) {
        sxx += (x[i] - xbar) * (x[i] - xbar);
        sxy += (x[i] - xbar) * (y[i] - ybar);
    }
    o.slope = sxy / sxx;
    o.intercept = ybar - o.slope * xbar;
    double ss_res = 0.0, ss_tot = 0.0;
    for (std::size_t i = 0; i < o.n; ++i) {
        const double r = y[i] - (o.intercept + o.slope * x[i]);
        ss_res += r * r;
        ss_tot += (y[i] - ybar) * (y[i] - ybar);
    }
    o.r_squared = (ss_tot > 0.0) ? 1.0 - ss_res / ss_tot : (ss_res == 0.0 ? 1.0 : 0.0);
    if (o.n > 2) {
        const double s2 = ss_res / (m - 2.0);
        o.se_slope = std::sqrt(s2 / sxx);
        o.se_intercept = std::sqrt(s2 * (1.0 / m + xbar * xbar / sxx));
    }
    return o;
}

} // namespace

double output_snr(const DecompositionResult& reference, const DecompositionResult& perturbed,
                  int z_lo, int z_hi) {
    if (reference.details.size() != perturbed.details.size())
        throw AnalysisError("output_snr: decompositions have different depths");
    if (z_lo < 1 || z_hi < z_lo || static_cast<std::size_t>(z_hi) > reference.details.size())
        throw std::invalid_argument("output_snr: bad level range");
    double sig = 0.0, noise = 0.0;
    for (int z = z_lo; z <= z_hi; ++z) {
        const auto& d = reference.details[static_cast<std::size_t>(z - 1)];
        const auto& dp = perturbed.details[static_cast<std::size_t>(z - 1)];
        if (d.size() != dp.size())
            throw AnalysisError("output_snr: level size mismatch between decompositions");
        for (std::size_t y = 0; y < d.size(); ++y) {
            sig += d[y] * d[y];
            const double e = dp[y] - d[y];
            noise += e * e;
        }
    }
    return snr_db_from_powers(sig, noise);
}

std::vector<double> sweep_grid(const ExperimentConfig& cfg) {
    std::vector<double> grid;
    if (std::isinf(cfg.snr_start_db) || std::isinf(cfg.snr_stop_db)) {
        grid.push_back(cfg.snr_start_db);
        if (cfg.snr_stop_db != cfg.snr_start_db) grid.push_back(cfg.snr_stop_db);
        return grid;
    }
    const double dir = (cfg.snr_stop_db >= cfg.snr_start_db) ? 1.0 : -1.0;
    const double span = std::abs(cfg.snr_stop_db - cfg.snr_start_db);
    const auto steps = static_cast<std::size_t>(std::floor(span / cfg.snr_step_db + 1e-9));
    grid.reserve(steps + 1);
    for (std::size_t i = 0; i <= steps; ++i)
        grid.push_back(cfg.snr_start_db + dir * cfg.snr_step_db * static_cast<double>(i));
    return grid;
}

std::vector<SnrSweepRecord> run_sweep(const ExperimentConfig& cfg) {
    validate(cfg);
    const FirFilter filter = design_halfband_lowpass(cfg.filter_order, cfg.cutoff);
    const std::vector<double> grid = sweep_grid(cfg);
    if ((cfg.n >> cfg.z_max) == 0)
        throw std::invalid_argument("run_sweep: infeasible level range");

    std::vector<SnrSweepRecord> records;
    records.reserve(grid.size() * static_cast<std::size_t>(cfg.trials) *
                    static_cast<std::size_t>(cfg.z_max - cfg.z_min + 2));

    for (std::size_t gi = 0; gi < grid.size(); ++gi) {
        const double snr_in = grid[gi];
        for (int trial = 0; trial < cfg.trials; ++trial) {
            const Signal s = generate_white_noise(
                cfg.n, derive_seed(cfg.master_seed, 1, gi + 1, static_cast<std::uint64_t>(trial)));
            PerturbationSpec pspec;
            pspec.snr_in_db = snr_in;
            pspec.seed = derive_seed(cfg.master_seed, 2, gi + 1, static_cast<std::uint64_t>(trial));
            pspec.mode = cfg.calibration_mode;
            const FirFilter fpert = perturb(filter, pspec);

            const DecompositionResult ref = decompose(s, filter, cfg.z_max, cfg.detail_mode);
            const DecompositionResult pert = decompose(s, fpert, cfg.z_max, cfg.detail_mode);

            double agg_sig = 0.0, agg_noise = 0.0;
            for (int z = cfg.z_min; z <= cfg.z_max; ++z) {
                const auto& d = ref.details[static_cast<std::size_t>(z - 1)];
                const auto& dp = pert.details[static_cast<std::size_t>(z - 1)];
                double sig = 0.0, noise = 0.0;
                for (std::size_t y = 0; y < d.size(); ++y) {
                    sig += d[y] * d[y];
                    const double e = dp[y] - d[y];
                    noise += e * e;
                }
                agg_sig += sig;
                agg_noise += noise;
                records.push_back({snr_in, z, cfg.n >> z, trial, sig, noise,
                                   snr_db_from_powers(sig, noise)});
            }
            records.push_back({snr_in, 0, 0, trial, agg_sig, agg_noise,
                               snr_db_from_powers(agg_sig, agg_noise)});
        }
    }
    return records;
}

std::vector<SnrSweepRecord> aggregate_levels(std::span<const SnrSweepRecord> records,
                                             int z_lo, int z_hi) {
    if (z_lo < 1 || z_hi < z_lo) throw std::invalid_argument("aggregate_levels: bad level range");
    std::map<std::pair<double, int>, std::pair<double, double>> acc;
    for (const auto& r : records) {
        if (r.level < z_lo || r.level > z_hi) continue;
        auto& slot = acc[{r.snr_in_db, r.trial}];
        slot.first += r.signal_power;
        slot.second += r.noise_power;
    }
    std::vector<SnrSweepRecord> out;
    out.reserve(acc.size());
    for (const auto& [key, powers] : acc)
        out.push_back({key.first, 0, 0, key.second, powers.first, powers.second,
                       snr_db_from_powers(powers.first, powers.second)});
    return out;
}

RegressionFit fit_linear(std::span<const SnrSweepRecord> records,
                         double window_lo, double window_hi, int level) {
    std::vector<double> x, y;
    for (const auto& r : records) {
        if (r.level != level) continue;
        if (!std::isfinite(r.snr_out_db)) continue;
        if (r.snr_in_db < window_lo || r.snr_in_db > window_hi) continue;
        x.push_back(r.snr_in_db);
        y.push_back(r.snr_out_db);
    }
    std::vector<double> distinct = x;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    if (distinct.size() < 3)
        throw AnalysisError("fit_linear: need >= 3 distinct input SNR values in the window");

    const Ols o = ols(x, y);
    RegressionFit fit;
    fit.slope = o.slope;
    fit.intercept = o.intercept;
    fit.r_squared = o.r_squared;
    fit.window_lo = window_lo;
    fit.window_hi = window_hi;
    fit.n_points = o.n;
    if (o.n > 2 && (o.se_slope > 0.0 || o.se_intercept > 0.0)) {
        boost::math::students_t dist(static_cast<double>(o.n) - 2.0);
        const double t = boost::math::quantile(dist, 0.975);
        fit.ci95_slope = t * o.se_slope;
        fit.ci95_intercept = t * o.se_intercept;
    }
    return fit;
}

RegimeThresholds detect_regimes(std::span<const SnrSweepRecord> records, int level,
                                const RegimeParams& params) {
    // Bin by input SNR and average the finite outputs.
    std::map<long long, std::pair<double, std::size_t>> bins;
    double x_min = kInf, x_max = -kInf;
    for (const auto& r : records) {
        if (r.level != level) continue;
        x_min = std::min(x_min, r.snr_in_db);
        x_max = std::max(x_max, r.snr_in_db);
    }
    if (!(x_max - x_min >= 100.0))
        throw AnalysisError("detect_regimes: records must span >= 100 dB of input SNR");
    for (const auto& r : records) {
        if (r.level != level || !std::isfinite(r.snr_out_db)) continue;
        const auto key = static_cast<long long>(std::llround((r.snr_in_db - x_min) / params.bin_width_db));
        auto& slot = bins[key];
        slot.first += r.snr_out_db;
        slot.second += 1;
    }
    std::vector<double> xs, means;
    for (const auto& [key, slot] : bins) {
        xs.push_back(x_min + static_cast<double>(key) * params.bin_width_db);
        means.push_back(slot.first / static_cast<double>(slot.second));
    }
    if (xs.size() < 3) throw AnalysisError("detect_regimes: too few populated bins");

    std::vector<double> slope(xs.size() - 1);
    for (std::size_t i = 0; i + 1 < xs.size(); ++i)
        slope[i] = (means[i + 1] - means[i]) / (xs[i + 1] - xs[i]);

    RegimeThresholds th{kInf, -kInf};
    // Plateau: smallest bin edge above which every local slope stays flat.
    std::size_t run_start = slope.size();
    while (run_start > 0 && slope[run_start - 1] < params.flat_slope) --run_start;
    if (run_start < slope.size()) th.plateau_threshold_db = xs[run_start];
    // Breakdown: largest bin edge below which every local slope stays steep.
    std::size_t run_end = 0;
    while (run_end < slope.size() && slope[run_end] > params.steep_slope) ++run_end;
    if (run_end > 0) th.breakdown_threshold_db = xs[run_end];
    return th;
}

RatioDiagnostic ratio_approx_diagnostic(std::span<const double> signal_powers,
                                        std::span<const double> noise_powers) {
    if (signal_powers.size() != noise_powers.size())
        throw std::invalid_argument("ratio_approx_diagnostic: length mismatch");
    const std::size_t m = signal_powers.size();
    if (m < 30) throw AnalysisError("ratio_approx_diagnostic: need >= 30 paired samples");
    for (std::size_t i = 0; i < m; ++i)
        if (!(signal_powers[i] > 0.0) || !(noise_powers[i] > 0.0))
            throw std::invalid_argument("ratio_approx_diagnostic: powers must be positive");

    auto mean_of = [m](std::span<const double> v) {
        double s = 0.0;
        for (double x : v) s += x;
        return s / static_cast<double>(m);
    };
    auto sd_of = [m](std::span<const double> v, double mu) {
        double s = 0.0;
        for (double x : v) s += (x - mu) * (x - mu);
        return std::sqrt(s / static_cast<double>(m - 1));
    };
    const double ms = mean_of(signal_powers);
    const double mn = mean_of(noise_powers);
    double mean_ratio = 0.0;
    for (std::size_t i = 0; i < m; ++i) mean_ratio += signal_powers[i] / noise_powers[i];
    mean_ratio /= static_cast<double>(m);

    RatioDiagnostic d;
    d.c_s = sd_of(signal_powers, ms) / ms;
    d.c_n = sd_of(noise_powers, mn) / mn;
    const double ratio_of_means = ms / mn;
    d.max_relative_gap = std::abs(mean_ratio - ratio_of_means) / ratio_of_means;
    return d;
}

OctaveDecay compare_octave_decay(std::span<const SnrSweepRecord> records,
                                 double window_lo, double window_hi) {
    int max_level = 0;
    for (const auto& r : records) max_level = std::max(max_level, r.level);
    std::vector<double> zs, intercepts;
    for (int z = 1; z <= max_level; ++z) {
        try {
            const RegressionFit fit = fit_linear(records, window_lo, window_hi, z);
            zs.push_back(static_cast<double>(z));
            intercepts.push_back(fit.intercept);
        } catch (const AnalysisError&) {
            // level not fittable; skip
        }
    }
    if (zs.size() < 4) throw AnalysisError("compare_octave_decay: need per-level fits for >= 4 levels");

    OctaveDecay out;
    out.levels_used = zs.size();
    out.db_per_octave_measured = ols(zs, intercepts).slope;
    std::vector<double> logz(zs.size());
    for (std::size_t i = 0; i < zs.size(); ++i) logz[i] = 10.0 * std::log10(zs[i]);
    out.db_per_octave_log_fit = ols(logz, intercepts).slope;
    return out;
}

} // namespace subband
