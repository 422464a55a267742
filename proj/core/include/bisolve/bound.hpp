#pragma once

#include <optional>
#include <string>

#include "bisolve/bipoly.hpp"

namespace bisolve {

enum class EpsilonMode { safe, paper, manual };

std::string to_string(EpsilonMode m);
std::optional<EpsilonMode> epsilon_mode_from_string(const std::string& s);

// Parameters of the zero-gap bound: any evaluation of f or g at a candidate
// algebraic pair is either exactly 0 or at least epsilon in magnitude.
//
//   N = max(||f||_1, ||g||_1)   (inputs scaled to primitive integer form)
//   M = max(||t||_1, ||T||_1)   (square-free projections)
//   s = deg(t) * deg(T)
//   epsilon = N^(1-s) * M^(-c*s)
//
// mode safe:   c = Dx + Dy with Dx = max(deg_x f, deg_x g), Dy likewise; the
//              provably sound worst case over the unknown exact algebraic
//              degrees of the coordinates.
// mode paper:  c = 3, a fixed legacy preset; not certified, flagged as such.
// mode manual: epsilon supplied by the caller, c unused.
struct BoundParams {
    Rational N, M;
    long s = 1;
    Rational c;
    EpsilonMode mode = EpsilonMode::safe;
    Rational epsilon;
    long epsilon_log2 = 0;  // floor(log2(epsilon))
    bool certified = false;
};

// Certified upper bound for the Mahler measure of any root of p: ||p||_1.
// p must be nonzero; callers pass primitive integer-normalized polynomials.
Rational mahler_upper_bound(const UniPoly& p);

BoundParams compute_params(const BiPoly& f, const BiPoly& g, const UniPoly& t_sf,
                           const UniPoly& T_sf, EpsilonMode mode,
                           const std::optional<Rational>& manual_eps = std::nullopt);

}  // namespace bisolve
