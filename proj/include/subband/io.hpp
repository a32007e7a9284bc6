#ifndef SUBBAND_IO_HPP
#define SUBBAND_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

namespace subband {

/// Shortest text that round-trips a double (17 significant digits).
std::string format_g17(double v);

/// Non-finite doubles are not valid JSON numbers; carry them as strings.
nlohmann::json json_number(double v);

/// One sample per line, full precision.
void write_samples_csv(const std::string& path, const std::vector<double>& samples,
                       const std::string& header);

/// One value per line; a single leading non-numeric line is skipped.
std::vector<double> read_samples_csv(const std::string& path);

void write_text_file(const std::string& path, const std::string& content);

} // namespace subband

#endif
