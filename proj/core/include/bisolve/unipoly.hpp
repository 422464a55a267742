#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bisolve/interval.hpp"
#include "bisolve/rational.hpp"

namespace bisolve {

// Dense univariate polynomial over Q, coefficients ascending by exponent.
// The zero polynomial is the empty coefficient vector; otherwise the leading
// coefficient is nonzero.
class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(char var) : var_(var) {}
    UniPoly(char var, std::vector<Rational> coeffs) : var_(var), coeffs_(std::move(coeffs)) {
        trim();
    }

    static UniPoly constant(char var, Rational c) { return UniPoly(var, {std::move(c)}); }
    // Convenience: from integer coefficient list, ascending.
    static UniPoly from_ints(char var, const std::vector<long>& cs);

    char var() const { return var_; }
    bool is_zero() const { return coeffs_.empty(); }
    // degree of the zero polynomial is -1
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const Rational& operator[](std::size_t i) const { return coeffs_[i]; }
    Rational coeff(std::size_t i) const {
        return i < coeffs_.size() ? coeffs_[i] : Rational(0);
    }
    const Rational& leading() const { return coeffs_.back(); }

    Rational one_norm() const;
    Rational eval(const Rational& x) const;
    Interval eval(const Interval& x) const;
    int sign_at(const Rational& x) const;

    UniPoly derivative() const;

    UniPoly operator-() const;
    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const Rational& c, const UniPoly& a);
    friend bool operator==(const UniPoly& a, const UniPoly& b) {
        return a.coeffs_ == b.coeffs_;
    }

    UniPoly pow(unsigned long k) const;
    // Multiply by var^k.
    UniPoly shift_up(std::size_t k) const;

    // Field division: a = q*b + r with deg r < deg b.
    static std::pair<UniPoly, UniPoly> divrem(const UniPoly& a, const UniPoly& b);
    // Division known to be exact; throws solver_error if a remainder appears.
    static UniPoly exact_div(const UniPoly& a, const UniPoly& b);

    // Scale to integer coefficients with content 1 and positive leading
    // coefficient. Roots are unchanged.
    UniPoly primitive_normalized() const;
    bool is_integer_primitive() const;
    UniPoly monic() const;

    std::string str() const;

  private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
    char var_ = 'x';
    std::vector<Rational> coeffs_;
};

// Monic gcd via primitive PRS on integer-normalized inputs.
UniPoly gcd_uni(const UniPoly& a, const UniPoly& b);

// p / gcd(p, p'), returned integer-primitive with positive leading coefficient.
UniPoly square_free_part(const UniPoly& p);

// Yun decomposition: p = content * prod factor_k ^ mult_k, factors square-free,
// pairwise coprime, primitive-normalized, multiplicities strictly increasing.
std::vector<std::pair<UniPoly, int>> yun_decomposition(const UniPoly& p);

// Exact count of real roots of square-free p in the open interval, by the
// sign-variation difference of the Sturm chain. Throws endpoint_is_root_error
// if p vanishes at an endpoint.
int sturm_count(const UniPoly& p, const Interval& interval);

}  // namespace bisolve
