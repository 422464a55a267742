#pragma once

#include <functional>
#include <vector>

#include "bisolve/bipoly.hpp"

namespace bisolve {

// Sylvester matrix of f, g viewed as polynomials in `eliminate`, entries
// univariate in the surviving variable. Row layout: deg(g) shifted rows of the
// coefficients of f in descending powers of the eliminated variable, then
// deg(f) shifted rows of g.
struct SylvesterMatrix {
    int dim = 0;
    std::vector<std::vector<UniPoly>> rows;
};

SylvesterMatrix sylvester_matrix(const BiPoly& f, const BiPoly& g, char eliminate);

// Resultant of two univariate polynomials in the same variable.
Rational resultant_uni(const UniPoly& a, const UniPoly& b);

// Res_eliminate(f, g) as a UniPoly in the surviving variable. Convention when
// exactly one input has degree zero in the eliminated variable v:
// Res_v(f, g) = f^(deg_v g). Throws degree_zero_in_eliminated_var when both do.
// `checkpoint`, when set, is invoked periodically and may throw to abort.
UniPoly resultant(const BiPoly& f, const BiPoly& g, char eliminate, int workers = 1,
                  const std::function<void()>& checkpoint = {});

// The two routes behind `resultant`; exposed so tests can check agreement.
// Fraction-free Bareiss elimination over univariate polynomial entries.
UniPoly resultant_bareiss(const BiPoly& f, const BiPoly& g, char eliminate,
                          const std::function<void()>& checkpoint = {});
// Evaluation / interpolation: specialize the surviving variable at points
// where neither leading coefficient vanishes, take univariate resultants,
// interpolate. Used for large Sylvester dimensions; points may be processed
// by several workers.
UniPoly resultant_interp(const BiPoly& f, const BiPoly& g, char eliminate, int workers = 1,
                         const std::function<void()>& checkpoint = {});

// Square-free, primitive, positive-leading-coefficient part of the resultant.
// Throws not_zero_dimensional if the raw resultant vanishes identically.
UniPoly no_extr_res(const BiPoly& f, const BiPoly& g, char eliminate, int workers = 1,
                    const std::function<void()>& checkpoint = {});

// Test oracle: does Res_y(f, g) evaluated at x0 equal the univariate
// resultant of f(x0, y) and g(x0, y)? Throws leading_coefficient_vanishes
// when the specialization is not regular.
bool specialization_check(const BiPoly& f, const BiPoly& g, const Rational& x0);

}  // namespace bisolve
