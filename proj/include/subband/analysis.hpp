#ifndef SUBBAND_ANALYSIS_HPP
#define SUBBAND_ANALYSIS_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "subband/cascade.hpp"
#include "subband/config.hpp"

namespace subband {

/// One measured point of the sweep. `level` 0 is the aggregate over the
/// configured level range; `snr_out_db` is +infinity when the perturbation
/// produced exactly zero difference power.
struct SnrSweepRecord {
    double snr_in_db = 0.0;
    int level = 0;
    std::size_t scale_label = 0; // n / 2^z, 0 for the aggregate
    int trial = 0;
    double signal_power = 0.0;
    double noise_power = 0.0;
    double snr_out_db = 0.0;
};

struct RegressionFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
    double ci95_slope = 0.0;     // 95% half-width
    double ci95_intercept = 0.0; // 95% half-width
    double window_lo = 0.0;
    double window_hi = 0.0;
    std::size_t n_points = 0;
};

struct RegimeParams {
    double flat_slope = 0.1;  // local slope below which the curve counts as flat
    double steep_slope = 1.5; // local slope above which the curve counts as diving
    double bin_width_db = 10.0;
};

/// Thresholds are +inf (no plateau) / -inf (no breakdown) sentinels when
/// the corresponding region is absent.
struct RegimeThresholds {
    double plateau_threshold_db = 0.0;
    double breakdown_threshold_db = 0.0;
};

struct RatioDiagnostic {
    double c_s = 0.0; // coefficient of variation of the signal powers
    double c_n = 0.0; // coefficient of variation of the noise powers
    double max_relative_gap = 0.0;
};

struct OctaveDecay {
    double db_per_octave_measured = 0.0; // slope of intercept vs z
    double db_per_octave_log_fit = 0.0;  // slope of intercept vs 10*log10(z)
    std::size_t levels_used = 0;
};

/// Ratio of summed detail power to summed squared difference over levels
/// [z_lo, z_hi], in dB. Returns +inf when the difference power is zero.
double output_snr(const DecompositionResult& reference, const DecompositionResult& perturbed,
                  int z_lo, int z_hi);

/// Run the Monte-Carlo sweep described by the config. Emits one record per
/// level in [z_min, z_max] plus one aggregate record (level 0) for every
/// (grid point, trial) pair. Fully deterministic in config.master_seed.
std::vector<SnrSweepRecord> run_sweep(const ExperimentConfig& cfg);

/// The sweep grid implied by the config (start toward stop, step > 0).
std::vector<double> sweep_grid(const ExperimentConfig& cfg);

/// Re-aggregate per-level records over [z_lo, z_hi], producing level-0
/// records (one per grid point and trial).
std::vector<SnrSweepRecord> aggregate_levels(std::span<const SnrSweepRecord> records,
                                             int z_lo, int z_hi);

/// Ordinary least squares of snr_out on snr_in over the window, restricted
/// to `level`; +inf records are excluded. Requires >= 3 distinct inputs.
RegressionFit fit_linear(std::span<const SnrSweepRecord> records,
                         double window_lo, double window_hi, int level);

/// Plateau/breakdown detection on binned means of the records at `level`.
RegimeThresholds detect_regimes(std::span<const SnrSweepRecord> records, int level,
                                const RegimeParams& params = {});

/// Empirical check of replacing E[S/N] with mean(S)/mean(N).
RatioDiagnostic ratio_approx_diagnostic(std::span<const double> signal_powers,
                                        std::span<const double> noise_powers);

/// Per-octave decay of the per-level fit intercepts, measured directly
/// against z and against 10*log10(z).
OctaveDecay compare_octave_decay(std::span<const SnrSweepRecord> records,
                                 double window_lo, double window_hi);

} // namespace subband

#endif
