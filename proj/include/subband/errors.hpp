#ifndef SUBBAND_ERRORS_HPP
#define SUBBAND_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace subband {

/// Raised when a brute-force enumeration would exceed its term budget.
struct BudgetExceededError : std::runtime_error {
    explicit BudgetExceededError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised by analysis routines when the data cannot support the requested
/// computation (too few points, insufficient span, mismatched shapes).
struct AnalysisError : std::runtime_error {
    explicit AnalysisError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace subband

#endif
