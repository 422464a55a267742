#pragma once

#include <functional>
#include <vector>

#include "bisolve/unipoly.hpp"

namespace bisolve {

// A real algebraic number: the unique root of `defining_poly` (square-free)
// inside `interval`. A rational root is stored as the degenerate interval
// [r, r]; otherwise the polynomial has opposite nonzero signs at the
// endpoints.
struct IsolatedRoot {
    UniPoly defining_poly;
    Interval interval;
    int raw_multiplicity = 1;  // multiplicity in the raw (pre-square-free) resultant
    int index = 0;             // position in ascending root order

    bool is_rational() const { return interval.is_point(); }
};

// B = 1 + max |a_i| / |a_d| over i < d; all real roots lie in (-B, B).
Rational cauchy_bound(const UniPoly& p);

// Descartes-rule bisection on (-B, B). p must be square-free.
std::vector<IsolatedRoot> isolate_real_roots(const UniPoly& p,
                                             const std::function<void()>& checkpoint = {});

// Shrink the isolating interval to width <= target_width by bisection. The
// root is never lost; a bisection point that hits the root exactly collapses
// the interval to a degenerate one.
IsolatedRoot refine(const IsolatedRoot& root, const Rational& target_width);

// Bisect `count` times (or until degenerate).
IsolatedRoot refine_steps(const IsolatedRoot& root, long count);

// Multiplicity of the isolated root in `raw`, read off the unique Yun factor
// of `raw` containing the root.
int raw_multiplicity(const UniPoly& raw, const IsolatedRoot& root);

// Number of sign variations in the Descartes test for the open interval
// (a, b); 0 and 1 are exact root counts.
int descartes_variations(const UniPoly& p, const Rational& a, const Rational& b);

}  // namespace bisolve
