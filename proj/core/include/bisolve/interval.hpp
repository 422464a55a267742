#pragma once

#include <algorithm>
#include <cassert>

#include "bisolve/rational.hpp"

namespace bisolve {

// Closed interval with exact rational endpoints. All operations return the
// tightest rational enclosure of the exact image set, so the certified
// decision path never rounds.
struct Interval {
    Rational lo, hi;

    Interval() = default;
    Interval(Rational point) : lo(point), hi(std::move(point)) {}
    Interval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) { assert(lo <= hi); }

    bool is_point() const { return lo == hi; }
    Rational width() const { return hi - lo; }
    Rational midpoint() const { return (lo + hi) / 2; }
    bool contains(const Rational& v) const { return lo <= v && v <= hi; }
    bool contains_zero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }

    friend Interval operator+(const Interval& a, const Interval& b) {
        return {a.lo + b.lo, a.hi + b.hi};
    }
    friend Interval operator-(const Interval& a, const Interval& b) {
        return {a.lo - b.hi, a.hi - b.lo};
    }
    friend Interval operator-(const Interval& a) { return {-a.hi, -a.lo}; }

    friend Interval operator*(const Interval& a, const Interval& b) {
        Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
        return {std::min(std::min(p1, p2), std::min(p3, p4)),
                std::max(std::max(p1, p2), std::max(p3, p4))};
    }

    friend Interval operator*(const Rational& c, const Interval& a) {
        if (sgn(c) >= 0) return {c * a.lo, c * a.hi};
        return {c * a.hi, c * a.lo};
    }

    friend Interval operator+(const Interval& a, const Rational& c) {
        return {a.lo + c, a.hi + c};
    }

    friend bool operator==(const Interval& a, const Interval& b) {
        return a.lo == b.lo && a.hi == b.hi;
    }
};

// Tight enclosure of {x^k : x in a}.
inline Interval pow(const Interval& a, unsigned long k) {
    if (k == 0) return {Rational(1), Rational(1)};
    Rational lo_k = pow_int(a.lo, k), hi_k = pow_int(a.hi, k);
    if (k % 2 == 1) return {lo_k, hi_k};
    if (sgn(a.lo) >= 0) return {lo_k, hi_k};
    if (sgn(a.hi) <= 0) return {hi_k, lo_k};
    return {Rational(0), std::max(lo_k, hi_k)};  // straddles zero
}

}  // namespace bisolve
