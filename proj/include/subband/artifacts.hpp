#ifndef SUBBAND_ARTIFACTS_HPP
#define SUBBAND_ARTIFACTS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "subband/analysis.hpp"
#include "subband/bounds.hpp"
#include "subband/config.hpp"
#include "subband/fft.hpp"

namespace subband::artifacts {

/// Coefficient SNR needed to keep output noise below 1% of output power at
/// the deepest fitted level, with the implied per-coefficient error scale
/// under both calibration conventions.
struct PrecisionRequirement {
    int level = 0;
    double slope = 0.0;
    double intercept = 0.0;
    double required_output_snr_db = 20.0;
    double required_input_snr_db = 0.0;
    double implied_error_paper_literal = 0.0;
    double implied_error_filter_power = 0.0;
};

PrecisionRequirement precision_requirement(const RegressionFit& deepest_fit, int level,
                                           const FirFilter& filter);

/// "index,value" CSV of the filter taps at full precision.
std::string design_csv(const FirFilter& f);

/// Fits, regimes, octave decay, worked example, and metadata for a sweep.
nlohmann::json sweep_fits_json(const ExperimentConfig& cfg,
                               std::span<const SnrSweepRecord> records);

/// Per-level bounds reports for the configured filter and level range.
nlohmann::json bounds_json(const ExperimentConfig& cfg, double snr_in_db);

/// Runs the sweep and writes sweep.csv and fits.json. Returns the paths.
std::vector<std::string> write_sweep(const ExperimentConfig& cfg, const std::string& dir);

/// Decomposes an input (or generated) signal and writes details_z<z>.csv.
std::vector<std::string> write_decompose(const ExperimentConfig& cfg, const std::string& dir,
                                         const std::optional<std::string>& input_csv);

std::vector<std::string> write_bounds(const ExperimentConfig& cfg, double snr_in_db,
                                      const std::string& dir);

/// Runs fft_roundoff_snr over sizes [2^log2_min, 2^log2_max] and writes
/// fft_errors.csv and fft_summary.json.
std::vector<std::string> write_fft_baseline(int log2_min, int log2_max, int trials,
                                            std::uint64_t seed, bool apply_mask,
                                            const std::string& dir);

struct ReportOutput {
    std::vector<std::string> files;
    std::string table; // human-readable comparison table
};

/// Joins fits.json, a fresh bounds report, and fft_summary.json (when
/// present) into summary.json plus a comparison table against the built-in
/// reference values.
ReportOutput write_report(const std::string& dir);

} // namespace subband::artifacts

#endif
