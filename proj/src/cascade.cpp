#include "subband/cascade.hpp"

#include <cmath>
#include <stdexcept>

#include "subband/errors.hpp"

namespace subband {

namespace {

constexpr double kOracleBudget = 1e6;

std::size_t mod_index(long long idx, std::size_t n) {
    const long long m = static_cast<long long>(n);
    long long r = idx % m;
    if (r < 0) r += m;
    return static_cast<std::size_t>(r);
}

void check_oracle_args(const Signal& s, const FirFilter& f, int z, std::size_t y) {
    if (!is_power_of_two(s.size()))
        throw std::invalid_argument("oracle: signal length must be a power of two");
    if (z < 1) throw std::invalid_argument("oracle: z must be >= 1");
    if ((s.size() >> z) == 0) throw std::invalid_argument("oracle: z too deep for signal length");
    if (y >= (s.size() >> z)) throw std::invalid_argument("oracle: y out of range for level");
    if (std::pow(static_cast<double>(f.taps()), z) > kOracleBudget)
        throw BudgetExceededError("oracle: taps^z exceeds the enumeration budget");
}

} // namespace

Signal lowpass_downsample(const Signal& s, const FirFilter& f) {
    const auto& x = s.samples;
    const std::size_t m = x.size();
    if (m < 2) throw std::invalid_argument("lowpass_downsample: signal too short");
    if (m % 2 != 0) throw std::invalid_argument("lowpass_downsample: signal length must be even");
    const auto& c = f.coefficients;
    if (c.empty()) throw std::invalid_argument("lowpass_downsample: empty filter");

    Signal out;
    out.samples.resize(m / 2);
    for (std::size_t y = 0; y < out.samples.size(); ++y) {
        double acc = 0.0;
        std::size_t j = 2 * y; // walks (2y - i) mod m as i increases
        for (double ci : c) {
            acc += ci * x[j];
            j = (j == 0) ? m - 1 : j - 1;
        }
        out.samples[y] = acc;
    }
    return out;
}

DecompositionResult decompose(const Signal& s, const FirFilter& f, int z_max, DetailMode mode) {
    const std::size_t n = s.size();
    if (!is_power_of_two(n)) throw std::invalid_argument("decompose: signal length must be a power of two");
    if (z_max < 1) throw std::invalid_argument("decompose: z_max must be >= 1");
    if (z_max >= 64 || (n >> z_max) == 0)
        throw std::invalid_argument("decompose: z_max too deep for signal length");

    DecompositionResult r;
    r.mode = mode;
    r.details.reserve(static_cast<std::size_t>(z_max));
    r.approximations.reserve(static_cast<std::size_t>(z_max));

    Signal a = s;
    for (int z = 1; z <= z_max; ++z) {
        Signal next = lowpass_downsample(a, f);
        std::vector<double> d(next.samples.size());
        if (mode == DetailMode::cascade_difference) {
            const std::size_t stride = static_cast<std::size_t>(1) << z;
            for (std::size_t y = 0; y < d.size(); ++y)
                d[y] = s.samples[y * stride] - next.samples[y];
        } else {
            for (std::size_t y = 0; y < d.size(); ++y)
                d[y] = a.samples[2 * y] - next.samples[y];
        }
        r.details.push_back(std::move(d));
        r.approximations.push_back(next.samples);
        r.scale_labels.push_back(n >> z);
        a = std::move(next);
    }
    return r;
}

double direct_detail_oracle(const Signal& s, const FirFilter& f, int z, std::size_t y) {
    check_oracle_args(s, f, z, y);
    const auto& c = f.coefficients;
    const std::size_t taps = c.size();
    const std::size_t n = s.size();
    const long long base = static_cast<long long>(y) << z;

    std::vector<std::size_t> idx(static_cast<std::size_t>(z), 0);
    double acc = 0.0;
    for (;;) {
        double prod = 1.0;
        long long w = 0;
        for (int k = 0; k < z; ++k) {
            prod *= c[idx[static_cast<std::size_t>(k)]];
            w += static_cast<long long>(idx[static_cast<std::size_t>(k)]) << k;
        }
        acc += prod * s.samples[mod_index(base - w, n)];
        int k = 0;
        while (k < z && ++idx[static_cast<std::size_t>(k)] == taps) {
            idx[static_cast<std::size_t>(k)] = 0;
            ++k;
        }
        if (k == z) break;
    }
    return s.samples[static_cast<std::size_t>(base)] - acc;
}

double noise_difference_oracle(const Signal& s, const FirFilter& f,
                               std::span<const double> eps, int z, std::size_t y) {
    check_oracle_args(s, f, z, y);
    if (eps.size() != f.taps())
        throw std::invalid_argument("noise_difference_oracle: eps must have one entry per tap");
    const auto& c = f.coefficients;
    const std::size_t taps = c.size();
    const std::size_t n = s.size();
    const long long base = static_cast<long long>(y) << z;
    const unsigned full = (1u << z) - 1u;

    std::vector<std::size_t> idx(static_cast<std::size_t>(z), 0);
    double acc = 0.0;
    for (;;) {
        long long w = 0;
        for (int k = 0; k < z; ++k)
            w += static_cast<long long>(idx[static_cast<std::size_t>(k)]) << k;
        const double sval = s.samples[mod_index(base - w, n)];
        // All nonempty subsets of positions taking the eps factor.
        double expansion = 0.0;
        for (unsigned mask = 1; mask <= full; ++mask) {
            double prod = 1.0;
            for (int k = 0; k < z; ++k) {
                const std::size_t i = idx[static_cast<std::size_t>(k)];
                prod *= (mask >> k & 1u) ? eps[i] : c[i];
            }
            expansion += prod;
        }
        acc += expansion * sval;
        int k = 0;
        while (k < z && ++idx[static_cast<std::size_t>(k)] == taps) {
            idx[static_cast<std::size_t>(k)] = 0;
            ++k;
        }
        if (k == z) break;
    }
    return acc;
}

} // namespace subband
