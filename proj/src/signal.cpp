#include "subband/signal.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace subband {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

} // namespace

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    std::uint64_t h = splitmix64(master);
    h = splitmix64(h ^ a);
    h = splitmix64(h ^ b);
    h = splitmix64(h ^ c);
    return h;
}

Signal generate_white_noise(std::size_t n, std::uint64_t seed) {
    if (n < 4 || !is_power_of_two(n))
        throw std::invalid_argument("generate_white_noise: n must be a power of two >= 4");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Signal s;
    s.samples.resize(n);
    for (double& v : s.samples) v = gauss(rng);
    return s;
}

Signal signal_from_samples(std::vector<double> samples) {
    if (samples.size() < 4 || !is_power_of_two(samples.size()))
        throw std::invalid_argument("signal_from_samples: length must be a power of two >= 4");
    for (double v : samples)
        if (!std::isfinite(v)) throw std::invalid_argument("signal_from_samples: non-finite sample");
    return Signal{std::move(samples)};
}

double mean_power(const Signal& s) {
    if (s.samples.empty()) return 0.0;
    double acc = 0.0;
    for (double v : s.samples) acc += v * v;
    return acc / static_cast<double>(s.samples.size());
}

} // namespace subband
