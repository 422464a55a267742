#include "bisolve/bipoly.hpp"

#include <algorithm>
#include <sstream>

#include "bisolve/errors.hpp"

namespace bisolve {

void BiPoly::add_term(int i, int j, const Rational& c) {
    if (c == 0) return;
    auto key = std::make_pair(i, j);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

BiPoly BiPoly::from_uni(const UniPoly& p) {
    BiPoly out;
    bool is_x = p.var() == 'x';
    for (int k = 0; k <= p.degree(); ++k) {
        const Rational& c = p[static_cast<std::size_t>(k)];
        if (c != 0) out.add_term(is_x ? k : 0, is_x ? 0 : k, c);
    }
    return out;
}

int BiPoly::deg_x() const {
    int d = -1;
    for (const auto& [ij, c] : terms_) d = std::max(d, ij.first);
    return d;
}

int BiPoly::deg_y() const {
    int d = -1;
    for (const auto& [ij, c] : terms_) d = std::max(d, ij.second);
    return d;
}

Rational BiPoly::coeff(int i, int j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational BiPoly::one_norm() const {
    Rational s(0);
    for (const auto& [ij, c] : terms_) s += abs(c);
    return s;
}

Rational BiPoly::eval(const Rational& x0, const Rational& y0) const {
    auto cs = coeffs_in('y');
    Rational acc(0);
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) acc = acc * y0 + it->eval(x0);
    return acc;
}

Interval BiPoly::eval(const Interval& X, const Interval& Y) const {
    auto cs = coeffs_in('y');
    Interval acc{Rational(0), Rational(0)};
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) acc = acc * Y + it->eval(X);
    return acc;
}

BiPoly BiPoly::derivative(char var) const {
    BiPoly out;
    for (const auto& [ij, c] : terms_) {
        auto [i, j] = ij;
        if (var == 'x') {
            if (i > 0) out.add_term(i - 1, j, Rational(i) * c);
        } else {
            if (j > 0) out.add_term(i, j - 1, Rational(j) * c);
        }
    }
    return out;
}

std::vector<UniPoly> BiPoly::coeffs_in(char var) const {
    char other = var == 'x' ? 'y' : 'x';
    int d = deg(var);
    std::vector<std::vector<Rational>> raw(static_cast<std::size_t>(std::max(d, -1) + 1));
    for (const auto& [ij, c] : terms_) {
        int k = var == 'x' ? ij.first : ij.second;
        int l = var == 'x' ? ij.second : ij.first;
        auto& v = raw[static_cast<std::size_t>(k)];
        if (v.size() <= static_cast<std::size_t>(l)) v.resize(static_cast<std::size_t>(l) + 1, Rational(0));
        v[static_cast<std::size_t>(l)] = c;
    }
    std::vector<UniPoly> out;
    out.reserve(raw.size());
    for (auto& v : raw) out.emplace_back(other, std::move(v));
    return out;
}

UniPoly BiPoly::substitute(char var, const Rational& v) const {
    auto cs = coeffs_in(var);
    UniPoly acc(var == 'x' ? 'y' : 'x');
    Rational p(1);
    for (std::size_t k = 0; k < cs.size(); ++k) {
        acc = acc + p * cs[k];
        p *= v;
    }
    return acc;
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
    BiPoly out = a;
    for (const auto& [ij, c] : b.terms_) out.add_term(ij.first, ij.second, c);
    return out;
}

BiPoly BiPoly::operator-() const {
    BiPoly out;
    for (const auto& [ij, c] : terms_) out.terms_.emplace(ij, -c);
    return out;
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) { return a + (-b); }

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly out;
    for (const auto& [ij, c] : a.terms_)
        for (const auto& [kl, d] : b.terms_)
            out.add_term(ij.first + kl.first, ij.second + kl.second, c * d);
    return out;
}

BiPoly operator*(const Rational& c, const BiPoly& a) {
    BiPoly out;
    if (c == 0) return out;
    for (const auto& [ij, d] : a.terms_) out.terms_.emplace(ij, c * d);
    return out;
}

BiPoly BiPoly::primitive_normalized() const {
    if (is_zero()) return *this;
    Int den_lcm(1), num_gcd(0);
    for (const auto& [ij, c] : terms_) {
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
    }
    Rational scale = make_rational(den_lcm, num_gcd);
    if (sign(terms_.rbegin()->second) < 0) scale = -scale;
    return scale * *this;
}

std::string BiPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [ij, c] = *it;
        if (!first) os << (sign(c) > 0 ? " + " : " - ");
        else if (sign(c) < 0) os << "-";
        first = false;
        Rational a = abs(c);
        bool needs_coeff = (a != 1) || (ij.first == 0 && ij.second == 0);
        if (needs_coeff) os << to_string(a);
        bool star = needs_coeff;
        if (ij.first > 0) {
            if (star) os << "*";
            os << "x";
            if (ij.first > 1) os << "^" << ij.first;
            star = true;
        }
        if (ij.second > 0) {
            if (star) os << "*";
            os << "y";
            if (ij.second > 1) os << "^" << ij.second;
        }
    }
    return os.str();
}

}  // namespace bisolve
