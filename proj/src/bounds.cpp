#include "subband/bounds.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "subband/errors.hpp"
#include "subband/signal.hpp"

namespace subband {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kF1Budget = 1e8;

void require_unit_sum(const FirFilter& f, const char* who) {
    double sum = 0.0;
    for (double v : f.coefficients) sum += v;
    if (std::abs(sum - 1.0) > 1e-9)
        throw std::invalid_argument(std::string(who) + ": filter must have unit coefficient sum");
}

double db10(double v) { return v > 0.0 ? 10.0 * std::log10(v) : -kInf; }

} // namespace

NumeratorBounds numerator_bounds(const FirFilter& f, int z, std::size_t n) {
    require_unit_sum(f, "numerator_bounds");
    if (z < 1) throw std::invalid_argument("numerator_bounds: z must be >= 1");
    if (!is_power_of_two(n) || (n >> z) == 0)
        throw std::invalid_argument("numerator_bounds: bad signal length for level");
    const FilterStats st = filter_stats(f);

    NumeratorBounds b;
    b.lo = std::max(0.0, 1.0 - 2.0 * st.max + st.min);
    b.hi = 1.0 - 2.0 * st.min + st.max;
    const double pop_db = db10(static_cast<double>(n >> z));
    b.db_lo = pop_db + db10(b.lo);
    b.db_hi = pop_db + db10(b.hi);
    const double tap_db = db10(static_cast<double>(f.taps())) - 10.0 * z * std::log10(2.0);
    b.db_lo_tapcount = tap_db + db10(b.lo);
    b.db_hi_tapcount = tap_db + db10(b.hi);
    return b;
}

double f1_bruteforce(const FirFilter& f, int z) {
    require_unit_sum(f, "f1_bruteforce");
    if (z < 1) throw std::invalid_argument("f1_bruteforce: z must be >= 1");
    const auto& c = f.coefficients;
    const std::size_t taps = c.size();
    const double ntaps = static_cast<double>(taps);
    const double pow2z = std::ldexp(1.0, z);

    if (z == 1) {
        double sum = 0.0;
        for (double v : c) sum += v;
        return ntaps / pow2z * sum;
    }
    if (static_cast<double>(z) * std::pow(ntaps, 2 * z - 2) > kF1Budget)
        throw BudgetExceededError("f1_bruteforce: enumeration budget exceeded");

    double total = 0.0;
    for (int j = 1; j <= z; ++j) {
        // Non-excluded positions; p takes the coefficient fixed by the
        // equal-weighted-sum constraint (indices wrap circularly mod taps).
        std::vector<int> others;
        for (int k = 1; k <= z; ++k)
            if (k != j) others.push_back(k);
        const int p = others.front();
        const std::vector<int> rest(others.begin() + 1, others.end());

        // Free indices: tuple-1 over `others`, tuple-2 over `rest`.
        const std::size_t free_count = others.size() + rest.size();
        std::vector<std::size_t> idx(free_count, 0);
        double acc = 0.0;
        for (;;) {
            long long w1 = 0;
            double prod = 1.0;
            for (std::size_t t = 0; t < others.size(); ++t) {
                const std::size_t i = idx[t];
                prod *= c[i];
                w1 += static_cast<long long>(i) << (others[t] - 1);
            }
            long long w2 = 0;
            for (std::size_t t = 0; t < rest.size(); ++t) {
                const std::size_t i = idx[others.size() + t];
                prod *= c[i];
                w2 += static_cast<long long>(i) << (rest[t] - 1);
            }
            // i'_p solved from w1 = w2 + 2^(p-1) i'_p; the difference is
            // always divisible because every position below p is shared.
            const long long solved = (w1 - w2) >> (p - 1);
            const long long wrapped = ((solved % static_cast<long long>(taps)) +
                                       static_cast<long long>(taps)) % static_cast<long long>(taps);
            acc += prod * c[static_cast<std::size_t>(wrapped)];

            std::size_t t = 0;
            while (t < free_count && ++idx[t] == taps) {
                idx[t] = 0;
                ++t;
            }
            if (t == free_count) break;
        }
        total += ntaps * acc; // the excluded index m ranges freely with no factor
    }
    return ntaps / pow2z * total;
}

double f1_alternate_constrained(const FirFilter& f, int z) {
    require_unit_sum(f, "f1_alternate_constrained");
    if (z < 1) throw std::invalid_argument("f1_alternate_constrained: z must be >= 1");
    const auto& c = f.coefficients;
    const std::size_t taps = c.size();
    const double ntaps = static_cast<double>(taps);
    const double pow2z = std::ldexp(1.0, z);
    if (std::pow(ntaps, 2 * z) > kF1Budget)
        throw BudgetExceededError("f1_alternate_constrained: enumeration budget exceeded");

    double total = 0.0;
    std::vector<std::size_t> idx(static_cast<std::size_t>(2 * z), 0);
    for (;;) {
        long long w1 = 0, w2 = 0;
        for (int k = 0; k < z; ++k) {
            w1 += static_cast<long long>(idx[static_cast<std::size_t>(k)]) << k;
            w2 += static_cast<long long>(idx[static_cast<std::size_t>(z + k)]) << k;
        }
        if (w1 == w2) {
            for (int j = 0; j < z; ++j) {
                if (idx[static_cast<std::size_t>(j)] != idx[static_cast<std::size_t>(z + j)]) continue;
                double prod = 1.0;
                for (int k = 0; k < z; ++k) {
                    if (k == j) continue;
                    prod *= c[idx[static_cast<std::size_t>(k)]] * c[idx[static_cast<std::size_t>(z + k)]];
                }
                total += prod;
            }
        }
        std::size_t t = 0;
        while (t < idx.size() && ++idx[t] == taps) {
            idx[t] = 0;
            ++t;
        }
        if (t == idx.size()) break;
    }
    return ntaps / pow2z * total;
}

F1Bounds f1_bounds(const FirFilter& f, int z) {
    require_unit_sum(f, "f1_bounds");
    if (z < 1) throw std::invalid_argument("f1_bounds: z must be >= 1");
    const FilterStats st = filter_stats(f);
    const double scale = static_cast<double>(f.taps()) * static_cast<double>(f.taps()) *
                         static_cast<double>(z) / std::ldexp(1.0, z);
    return {scale * st.min_abs, scale * st.max};
}

NoisePowerApprox noise_power_approx(const FirFilter& f, double snr_in_db, int z) {
    NoisePowerApprox out;
    out.low_snr_warning = snr_in_db < 50.0;
    double f1;
    try {
        f1 = f1_bruteforce(f, z);
        out.used_exact_f1 = true;
    } catch (const BudgetExceededError&) {
        const F1Bounds b = f1_bounds(f, z);
        f1 = (b.lo > 0.0) ? std::sqrt(b.lo * b.hi) : b.hi;
        out.used_exact_f1 = false;
    }
    out.db = -snr_in_db - db10(f1);
    return out;
}

SnrUpperBound snr_upper_bound(const FirFilter& f, int z, double snr_in_db, std::size_t n) {
    require_unit_sum(f, "snr_upper_bound");
    if (z < 1) throw std::invalid_argument("snr_upper_bound: z must be >= 1");
    if (!is_power_of_two(n) || (n >> z) == 0)
        throw std::invalid_argument("snr_upper_bound: bad signal length for level");
    const FilterStats st = filter_stats(f);

    SnrUpperBound b;
    b.assumptions_violated = st.min < 0.0;
    if (st.min_abs == 0.0) {
        b.degenerate = true;
        b.db = kInf;
        b.literal_last_term = kInf;
        return b;
    }
    b.literal_last_term = -std::log(st.min_abs);
    b.db = snr_in_db - db10(static_cast<double>(f.taps())) +
           db10(1.0 - 2.0 * st.min + st.max) - db10(static_cast<double>(z)) -
           db10(st.min_abs);
    return b;
}

BoundsReport bounds_report(const FirFilter& f, int z, std::size_t n, double snr_in_db) {
    BoundsReport r;
    r.z = z;
    r.numerator = numerator_bounds(f, z, n);
    const F1Bounds fb = f1_bounds(f, z);
    r.f1_lo = fb.lo;
    r.f1_hi = fb.hi;
    try {
        r.f1_exact = f1_bruteforce(f, z);
    } catch (const BudgetExceededError&) {
    }
    try {
        r.f1_alternate_constrained = f1_alternate_constrained(f, z);
    } catch (const BudgetExceededError&) {
    }
    r.noise_power = noise_power_approx(f, snr_in_db, z);
    r.snr_upper = snr_upper_bound(f, z, snr_in_db, n);
    r.assumptions_violated = r.snr_upper.assumptions_violated;
    return r;
}

} // namespace subband
