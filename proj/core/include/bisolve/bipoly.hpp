#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bisolve/unipoly.hpp"

namespace bisolve {

// Sparse bivariate polynomial over Q in the variables x, y: exponent pair
// (i, j) -> nonzero coefficient. The zero polynomial has an empty map.
class BiPoly {
  public:
    using Term = std::pair<std::pair<int, int>, Rational>;

    BiPoly() = default;

    void add_term(int i, int j, const Rational& c);
    static BiPoly from_uni(const UniPoly& p);  // p.var() selects x or y

    bool is_zero() const { return terms_.empty(); }
    int deg_x() const;
    int deg_y() const;
    int deg(char var) const { return var == 'x' ? deg_x() : deg_y(); }
    const std::map<std::pair<int, int>, Rational>& terms() const { return terms_; }
    Rational coeff(int i, int j) const;

    Rational one_norm() const;
    Rational eval(const Rational& x0, const Rational& y0) const;
    // Horner scheme nested by y then x with exact interval arithmetic; the
    // result encloses p(x, y) for every (x, y) in X x Y.
    Interval eval(const Interval& X, const Interval& Y) const;

    BiPoly derivative(char var) const;

    // Coefficients of this viewed as a polynomial in `var`, each a UniPoly in
    // the other variable, ascending by the power of `var`.
    std::vector<UniPoly> coeffs_in(char var) const;
    // Substitute a rational for `var`, leaving a UniPoly in the other variable.
    UniPoly substitute(char var, const Rational& v) const;

    friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator-(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator*(const Rational& c, const BiPoly& a);
    BiPoly operator-() const;
    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }

    // Scale to integer coefficients with content 1 and positive leading
    // coefficient (lex order on (i, j)); the zero set is unchanged.
    BiPoly primitive_normalized() const;

    std::string str() const;

  private:
    std::map<std::pair<int, int>, Rational> terms_;
};

}  // namespace bisolve
