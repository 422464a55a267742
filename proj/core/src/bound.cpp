#include "bisolve/bound.hpp"

#include <algorithm>

#include "bisolve/errors.hpp"

namespace bisolve {

std::string to_string(EpsilonMode m) {
    switch (m) {
        case EpsilonMode::safe: return "safe";
        case EpsilonMode::paper: return "paper";
        case EpsilonMode::manual: return "manual";
    }
    return "?";
}

std::optional<EpsilonMode> epsilon_mode_from_string(const std::string& s) {
    if (s == "safe") return EpsilonMode::safe;
    if (s == "paper") return EpsilonMode::paper;
    if (s == "manual") return EpsilonMode::manual;
    return std::nullopt;
}

Rational mahler_upper_bound(const UniPoly& p) {
    if (p.is_zero()) throw zero_polynomial_error();
    return p.one_norm();
}

BoundParams compute_params(const BiPoly& f, const BiPoly& g, const UniPoly& t_sf,
                           const UniPoly& T_sf, EpsilonMode mode,
                           const std::optional<Rational>& manual_eps) {
    BoundParams bp;
    bp.mode = mode;
    BiPoly fi = f.primitive_normalized();
    BiPoly gi = g.primitive_normalized();
    bp.N = std::max(fi.one_norm(), gi.one_norm());
    bp.M = std::max(mahler_upper_bound(t_sf), mahler_upper_bound(T_sf));
    bp.s = std::max(1L, static_cast<long>(t_sf.degree()) * T_sf.degree());

    if (mode == EpsilonMode::manual) {
        if (!manual_eps) throw manual_eps_missing();
        if (sgn(*manual_eps) <= 0) throw manual_eps_non_positive();
        bp.epsilon = *manual_eps;
        bp.c = 0;
        bp.certified = false;
    } else {
        if (mode == EpsilonMode::safe) {
            long Dx = std::max(fi.deg_x(), gi.deg_x());
            long Dy = std::max(fi.deg_y(), gi.deg_y());
            bp.c = Rational(Dx + Dy);
            bp.certified = true;
        } else {
            bp.c = 3;
            bp.certified = false;
        }
        // epsilon = N^(1-s) * M^(-c*s), exponents nonpositive integers here.
        Rational cs = bp.c * Rational(bp.s);
        unsigned long e_n = static_cast<unsigned long>(bp.s - 1);
        unsigned long e_m = cs.get_num().get_ui();  // c integral in both modes
        bp.epsilon = Rational(1) / (pow_int(bp.N, e_n) * pow_int(bp.M, e_m));
    }
    bp.epsilon_log2 = floor_log2(bp.epsilon);
    return bp;
}

}  // namespace bisolve
