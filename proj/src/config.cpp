#include "subband/config.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <stdexcept>

namespace subband {

namespace {

// Sweep SNR endpoints may be the +inf no-noise sentinel; JSON carries
// those as the string "inf".
double snr_from_json(const nlohmann::json& v, const char* key) {
    if (v.is_string()) {
        const std::string s = v.get<std::string>();
        if (s == "inf" || s == "+inf") return std::numeric_limits<double>::infinity();
        throw std::invalid_argument(std::string("config: bad string value for ") + key);
    }
    return v.get<double>();
}

nlohmann::json snr_to_json(double v) {
    if (std::isinf(v) && v > 0) return "inf";
    return v;
}

} // namespace

std::string to_string(CalibrationMode mode) {
    return mode == CalibrationMode::filter_power ? "filter-power" : "paper-literal";
}

std::string to_string(DetailMode mode) {
    return mode == DetailMode::cascade_difference ? "cascade-difference" : "per-stage";
}

CalibrationMode calibration_mode_from_string(const std::string& s) {
    if (s == "filter-power") return CalibrationMode::filter_power;
    if (s == "paper-literal") return CalibrationMode::paper_literal;
    throw std::invalid_argument("config: unknown calibration_mode '" + s + "'");
}

DetailMode detail_mode_from_string(const std::string& s) {
    if (s == "cascade-difference") return DetailMode::cascade_difference;
    if (s == "per-stage") return DetailMode::per_stage;
    throw std::invalid_argument("config: unknown detail_mode '" + s + "'");
}

void validate(const ExperimentConfig& cfg) {
    if (!is_power_of_two(cfg.n) || cfg.n < 4)
        throw std::invalid_argument("config: n must be a power of two >= 4");
    if (cfg.filter_order < 2 || cfg.filter_order % 2 != 0)
        throw std::invalid_argument("config: filter_order must be even and >= 2");
    if (!(cfg.cutoff > 0.0 && cfg.cutoff < 1.0))
        throw std::invalid_argument("config: cutoff must be in (0, 1)");
    int log2n = 0;
    while ((cfg.n >> log2n) > 1) ++log2n;
    if (cfg.z_min < 1 || cfg.z_max < cfg.z_min || cfg.z_max > log2n)
        throw std::invalid_argument("config: need 1 <= z_min <= z_max <= log2(n)");
    if (!(cfg.snr_step_db > 0.0))
        throw std::invalid_argument("config: snr_step_db must be > 0");
    if (std::isnan(cfg.snr_start_db) || std::isnan(cfg.snr_stop_db))
        throw std::invalid_argument("config: NaN sweep endpoint");
    if (cfg.trials < 1) throw std::invalid_argument("config: trials must be >= 1");
    if (!(cfg.fit_window_lo < cfg.fit_window_hi))
        throw std::invalid_argument("config: fit window must satisfy lo < hi");
}

ExperimentConfig config_from_json(const nlohmann::json& j) {
    ExperimentConfig cfg;
    if (j.contains("n")) cfg.n = j.at("n").get<std::size_t>();
    if (j.contains("filter_order")) cfg.filter_order = j.at("filter_order").get<int>();
    if (j.contains("cutoff")) cfg.cutoff = j.at("cutoff").get<double>();
    if (j.contains("z_min")) cfg.z_min = j.at("z_min").get<int>();
    if (j.contains("z_max")) cfg.z_max = j.at("z_max").get<int>();
    if (j.contains("snr_start_db")) cfg.snr_start_db = snr_from_json(j.at("snr_start_db"), "snr_start_db");
    if (j.contains("snr_stop_db")) cfg.snr_stop_db = snr_from_json(j.at("snr_stop_db"), "snr_stop_db");
    if (j.contains("snr_step_db")) cfg.snr_step_db = j.at("snr_step_db").get<double>();
    if (j.contains("trials")) cfg.trials = j.at("trials").get<int>();
    if (j.contains("master_seed")) cfg.master_seed = j.at("master_seed").get<std::uint64_t>();
    if (j.contains("calibration_mode"))
        cfg.calibration_mode = calibration_mode_from_string(j.at("calibration_mode").get<std::string>());
    if (j.contains("fit_window")) {
        const auto& w = j.at("fit_window");
        if (!w.is_array() || w.size() != 2)
            throw std::invalid_argument("config: fit_window must be [lo, hi]");
        cfg.fit_window_lo = w[0].get<double>();
        cfg.fit_window_hi = w[1].get<double>();
    }
    if (j.contains("detail_mode"))
        cfg.detail_mode = detail_mode_from_string(j.at("detail_mode").get<std::string>());
    if (j.contains("output_dir")) cfg.output_dir = j.at("output_dir").get<std::string>();
    validate(cfg);
    return cfg;
}

nlohmann::json config_to_json(const ExperimentConfig& cfg) {
    nlohmann::json j;
    j["n"] = cfg.n;
    j["filter_order"] = cfg.filter_order;
    j["cutoff"] = cfg.cutoff;
    j["z_min"] = cfg.z_min;
    j["z_max"] = cfg.z_max;
    j["snr_start_db"] = snr_to_json(cfg.snr_start_db);
    j["snr_stop_db"] = snr_to_json(cfg.snr_stop_db);
    j["snr_step_db"] = cfg.snr_step_db;
    j["trials"] = cfg.trials;
    j["master_seed"] = cfg.master_seed;
    j["calibration_mode"] = to_string(cfg.calibration_mode);
    j["fit_window"] = {cfg.fit_window_lo, cfg.fit_window_hi};
    j["detail_mode"] = to_string(cfg.detail_mode);
    j["output_dir"] = cfg.output_dir;
    return j;
}

ExperimentConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("config: cannot open '" + path + "'");
    nlohmann::json j;
    in >> j;
    return config_from_json(j);
}

} // namespace subband
