#include "subband/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace subband {

std::string format_g17(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (std::isnan(v)) return "nan";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

nlohmann::json json_number(double v) {
    if (std::isfinite(v)) return v;
    if (std::isnan(v)) return "nan";
    return v > 0 ? "inf" : "-inf";
}

void write_samples_csv(const std::string& path, const std::vector<double>& samples,
                       const std::string& header) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    if (!header.empty()) out << header << '\n';
    for (double v : samples) out << format_g17(v) << '\n';
    if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

std::vector<double> read_samples_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::vector<double> samples;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        char* end = nullptr;
        const double v = std::strtod(line.c_str(), &end);
        if (end == line.c_str()) {
            if (first) {
                first = false;
                continue; // header line
            }
            throw std::runtime_error("bad sample line in '" + path + "': " + line);
        }
        first = false;
        samples.push_back(v);
    }
    return samples;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << content;
    if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

} // namespace subband
