#pragma once

#include <random>
#include <vector>

#include "bisolve/bipoly.hpp"
#include "bisolve/parser.hpp"
#include "bisolve/unipoly.hpp"

namespace bisolve::testutil {

inline BiPoly P(const std::string& text) { return parse_poly(text); }

inline Rational rand_rational(std::mt19937_64& rng, int bound) {
    std::uniform_int_distribution<long> num(-bound, bound);
    std::uniform_int_distribution<long> den(1, bound);
    return make_rational(num(rng), den(rng));
}

inline Rational rand_nonzero_rational(std::mt19937_64& rng, int bound) {
    for (;;) {
        Rational r = rand_rational(rng, bound);
        if (r != 0) return r;
    }
}

inline UniPoly rand_unipoly(std::mt19937_64& rng, char var, int max_degree, int coeff_bound,
                            bool integer_coeffs = true) {
    std::uniform_int_distribution<int> deg(1, max_degree);
    std::uniform_int_distribution<long> coeff(-coeff_bound, coeff_bound);
    int d = deg(rng);
    std::vector<Rational> cs(static_cast<std::size_t>(d) + 1);
    for (auto& c : cs)
        c = integer_coeffs ? Rational(coeff(rng)) : rand_rational(rng, coeff_bound);
    while (cs.back() == 0) cs.back() = Rational(coeff(rng));
    return UniPoly(var, std::move(cs));
}

inline BiPoly rand_bipoly(std::mt19937_64& rng, int max_total_degree, int coeff_bound) {
    std::uniform_int_distribution<long> coeff(-coeff_bound, coeff_bound);
    BiPoly p;
    for (int i = 0; i <= max_total_degree; ++i)
        for (int j = 0; i + j <= max_total_degree; ++j)
            p.add_term(i, j, Rational(coeff(rng)));
    return p;
}

// Like rand_bipoly but guaranteed nonzero and non-constant.
inline BiPoly rand_bipoly_nontrivial(std::mt19937_64& rng, int max_total_degree,
                                     int coeff_bound) {
    for (;;) {
        BiPoly p = rand_bipoly(rng, max_total_degree, coeff_bound);
        if (!p.is_zero() && (p.deg_x() > 0 || p.deg_y() > 0)) return p;
    }
}

}  // namespace bisolve::testutil
