#ifndef SUBBAND_CONFIG_HPP
#define SUBBAND_CONFIG_HPP

#include <cstddef>
#include <cstdint>
#include <string>

#include <json.hpp>

#include "subband/cascade.hpp"
#include "subband/perturbation.hpp"

namespace subband {

/// Declarative description of a sweep experiment. Defaults follow the
/// standard configuration: n = 2^14, 31-tap half-band filter, 100 trials,
/// input SNR swept 380 -> 0 dB in 10 dB steps, fit window [50, 270] dB.
struct ExperimentConfig {
    std::size_t n = std::size_t{1} << 14;
    int filter_order = 30;
    double cutoff = 0.5;
    int z_min = 1;
    int z_max = 12;
    double snr_start_db = 380.0;
    double snr_stop_db = 0.0;
    double snr_step_db = 10.0;
    int trials = 100;
    std::uint64_t master_seed = 1;
    CalibrationMode calibration_mode = CalibrationMode::filter_power;
    double fit_window_lo = 50.0;
    double fit_window_hi = 270.0;
    DetailMode detail_mode = DetailMode::per_stage;
    std::string output_dir = ".";
};

/// Throws std::invalid_argument when a field violates its constraints.
void validate(const ExperimentConfig& cfg);

ExperimentConfig config_from_json(const nlohmann::json& j);
nlohmann::json config_to_json(const ExperimentConfig& cfg);

ExperimentConfig load_config_file(const std::string& path);

std::string to_string(CalibrationMode mode);
std::string to_string(DetailMode mode);
CalibrationMode calibration_mode_from_string(const std::string& s);
DetailMode detail_mode_from_string(const std::string& s);

} // namespace subband

#endif
