#include "subband/dd.hpp"

#include <stdexcept>

namespace subband {

namespace {

// 2*pi to double-double precision.
constexpr DD kTwoPi{6.283185307179586232e+00, 2.449293598294706414e-16};

// Taylor series on x in [0, pi/4]; terms fall below 1e-35 within ~20 steps.
void sincos_taylor(DD x, DD& c, DD& s) {
    const DD x2 = x * x;
    DD term = x;
    DD sum_s = x;
    for (int k = 1; k <= 24; ++k) {
        term = term * x2;
        term = term * DD(-1.0 / ((2.0 * k) * (2.0 * k + 1.0)));
        sum_s += term;
        if (std::abs(term.hi) < 1e-35) break;
    }
    DD term_c{1.0};
    DD sum_c{1.0};
    for (int k = 1; k <= 24; ++k) {
        term_c = term_c * x2;
        term_c = term_c * DD(-1.0 / ((2.0 * k - 1.0) * (2.0 * k)));
        sum_c += term_c;
        if (std::abs(term_c.hi) < 1e-35) break;
    }
    s = sum_s;
    c = sum_c;
}

} // namespace

void dd_sincos_turn(std::uint64_t k, std::uint64_t n, DD& cos_out, DD& sin_out) {
    if (n == 0 || (n & (n - 1)) != 0)
        throw std::invalid_argument("dd_sincos_turn: n must be a power of two");
    k &= (n - 1);
    // k/n, quadrant index, and the in-quadrant residue are all exact binary
    // fractions, so the reduction introduces no rounding at all.
    const double frac = static_cast<double>(k) / static_cast<double>(n);
    const int quadrant = static_cast<int>(std::floor(4.0 * frac));
    double r = frac - 0.25 * quadrant;

    bool swap = false;
    if (r > 0.125) {
        r = 0.25 - r;
        swap = true;
    }
    DD c, s;
    sincos_taylor(kTwoPi * DD(r), c, s);
    if (swap) {
        const DD t = c;
        c = s;
        s = t;
    }
    switch (quadrant) {
        case 0: cos_out = c; sin_out = s; break;
        case 1: cos_out = -s; sin_out = c; break;
        case 2: cos_out = -c; sin_out = -s; break;
        default: cos_out = s; sin_out = -c; break;
    }
}

} // namespace subband
