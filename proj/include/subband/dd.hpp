#ifndef SUBBAND_DD_HPP
#define SUBBAND_DD_HPP

#include <cmath>
#include <cstdint>

namespace subband {

/// Double-double value (Dekker 1971): an unevaluated sum hi + lo with
/// |lo| <= ulp(hi)/2, giving roughly 106 bits of significand.
struct DD {
    double hi = 0.0;
    double lo = 0.0;

    DD() = default;
    explicit constexpr DD(double x) : hi(x), lo(0.0) {}
    constexpr DD(double h, double l) : hi(h), lo(l) {}

    double to_double() const { return hi + lo; }
};

namespace dd_detail {

inline DD two_sum(double a, double b) {
    const double s = a + b;
    const double bb = s - a;
    const double err = (a - (s - bb)) + (b - bb);
    return {s, err};
}

inline DD quick_two_sum(double a, double b) {
    const double s = a + b;
    return {s, b - (s - a)};
}

// Dekker split: x = hi + lo with hi holding the top 26 bits.
inline void split(double x, double& hi, double& lo) {
    const double c = 134217729.0 * x; // 2^27 + 1
    hi = c - (c - x);
    lo = x - hi;
}

inline DD two_prod(double a, double b) {
    const double p = a * b;
    double ah, al, bh, bl;
    split(a, ah, al);
    split(b, bh, bl);
    const double err = ((ah * bh - p) + ah * bl + al * bh) + al * bl;
    return {p, err};
}

} // namespace dd_detail

inline DD operator+(DD a, DD b) {
    DD s = dd_detail::two_sum(a.hi, b.hi);
    s.lo += a.lo + b.lo;
    return dd_detail::quick_two_sum(s.hi, s.lo);
}

inline DD operator-(DD a) { return {-a.hi, -a.lo}; }
inline DD operator-(DD a, DD b) { return a + (-b); }

inline DD operator*(DD a, DD b) {
    DD p = dd_detail::two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return dd_detail::quick_two_sum(p.hi, p.lo);
}

inline DD operator*(DD a, double b) { return a * DD(b); }
inline DD operator*(double a, DD b) { return DD(a) * b; }

inline DD operator/(DD a, DD b) {
    const double q1 = a.hi / b.hi;
    DD r = a - b * DD(q1);
    const double q2 = r.hi / b.hi;
    r = r - b * DD(q2);
    const double q3 = r.hi / b.hi;
    DD q = dd_detail::quick_two_sum(q1, q2);
    return q + DD(q3);
}

inline DD& operator+=(DD& a, DD b) { a = a + b; return a; }
inline DD& operator-=(DD& a, DD b) { a = a - b; return a; }
inline DD& operator*=(DD& a, DD b) { a = a * b; return a; }

/// cos and sin of 2*pi*k/n for power-of-two n, accurate to double-double
/// precision (quadrant-exact reduction plus a Taylor tail on [0, pi/4]).
void dd_sincos_turn(std::uint64_t k, std::uint64_t n, DD& cos_out, DD& sin_out);

} // namespace subband

#endif
