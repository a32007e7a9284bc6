#ifndef SUBBAND_FFT_HPP
#define SUBBAND_FFT_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "subband/dd.hpp"

namespace subband {

/// Minimal complex pair usable with both double and DD scalars.
template <typename T>
struct Cplx {
    T re{};
    T im{};
};

namespace fft_detail {

template <typename T>
Cplx<T> cmul(const Cplx<T>& a, const Cplx<T>& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

inline void bit_reverse_indices(std::size_t n, std::vector<std::size_t>& rev) {
    rev.assign(n, 0);
    std::size_t j = 0;
    for (std::size_t i = 1; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        rev[i] = j;
    }
}

} // namespace fft_detail

/// In-place iterative radix-2 FFT. `twiddles` must hold n/2 entries
/// w[k] = exp(-2*pi*i*k/n); the inverse pass conjugates them and applies
/// the 1/n scale (exact for power-of-two n).
template <typename T>
void fft_radix2(std::vector<Cplx<T>>& a, const std::vector<Cplx<T>>& twiddles, bool inverse) {
    const std::size_t n = a.size();
    if (n == 0 || (n & (n - 1)) != 0) throw std::invalid_argument("fft_radix2: size must be a power of two");
    if (twiddles.size() != n / 2) throw std::invalid_argument("fft_radix2: twiddle table size mismatch");

    static thread_local std::vector<std::size_t> rev;
    fft_detail::bit_reverse_indices(n, rev);
    for (std::size_t i = 0; i < n; ++i)
        if (i < rev[i]) std::swap(a[i], a[rev[i]]);

    for (std::size_t len = 2; len <= n; len <<= 1) {
        const std::size_t stride = n / len;
        for (std::size_t base = 0; base < n; base += len) {
            for (std::size_t k = 0; k < len / 2; ++k) {
                Cplx<T> w = twiddles[k * stride];
                if (inverse) w.im = -w.im;
                const Cplx<T> u = a[base + k];
                const Cplx<T> v = fft_detail::cmul(a[base + k + len / 2], w);
                a[base + k] = {u.re + v.re, u.im + v.im};
                a[base + k + len / 2] = {u.re - v.re, u.im - v.im};
            }
        }
    }
    if (inverse) {
        const double scale = 1.0 / static_cast<double>(n);
        for (auto& v : a) {
            v.re = v.re * T(scale);
            v.im = v.im * T(scale);
        }
    }
}

std::vector<Cplx<double>> make_twiddles_double(std::size_t n);
std::vector<Cplx<DD>> make_twiddles_dd(std::size_t n);

/// One measured size of the FFT round-off comparison.
struct FftErrorRecord {
    std::size_t size = 0;
    double snr_db = 0.0;
    double ci95 = 0.0;
    int trials = 0;
    std::vector<double> per_trial_snr_db; // +inf entries mark exact matches
};

/// Round-trip FFT -> half-band mask -> inverse FFT on white noise, in
/// working double precision, scored against the identical pipeline run in
/// double-double arithmetic. `apply_mask` false gives the pure round trip.
FftErrorRecord fft_roundoff_snr(std::size_t size, int trials, std::uint64_t seed,
                                bool apply_mask = true);

struct FftDecayFit {
    double db_per_octave = 0.0;
    double bits_per_octave = 0.0; // db_per_octave * log2(10) / 10
};

/// Least-squares slope of mean SNR versus log2(size). Requires >= 4 sizes.
FftDecayFit fft_decay_fit(const std::vector<FftErrorRecord>& records);

} // namespace subband

#endif
