#include "bisolve/unipoly.hpp"

#include <sstream>

#include "bisolve/errors.hpp"

namespace bisolve {

UniPoly UniPoly::from_ints(char var, const std::vector<long>& cs) {
    std::vector<Rational> coeffs;
    coeffs.reserve(cs.size());
    for (long c : cs) coeffs.emplace_back(c);
    return UniPoly(var, std::move(coeffs));
}

Rational UniPoly::one_norm() const {
    Rational s(0);
    for (const auto& c : coeffs_) s += abs(c);
    return s;
}

Rational UniPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Interval UniPoly::eval(const Interval& x) const {
    Interval acc{Rational(0), Rational(0)};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

int UniPoly::sign_at(const Rational& x) const { return sgn(eval(x)); }

UniPoly UniPoly::derivative() const {
    if (coeffs_.size() <= 1) return UniPoly(var_);
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = Rational(long(i)) * coeffs_[i];
    return UniPoly(var_, std::move(d));
}

UniPoly UniPoly::operator-() const {
    std::vector<Rational> c(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] = -coeffs_[i];
    return UniPoly(var_, std::move(c));
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] = a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
    return UniPoly(a.var_ ? a.var_ : b.var_, std::move(c));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly(a.var_);
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return UniPoly(a.var_, std::move(c));
}

UniPoly operator*(const Rational& c, const UniPoly& a) {
    if (c == 0) return UniPoly(a.var_);
    std::vector<Rational> out(a.coeffs_.size());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] = c * a.coeffs_[i];
    return UniPoly(a.var_, std::move(out));
}

UniPoly UniPoly::pow(unsigned long k) const {
    UniPoly result = UniPoly::constant(var_, Rational(1));
    UniPoly base = *this;
    while (k) {
        if (k & 1) result = result * base;
        base = base * base;
        k >>= 1;
    }
    return result;
}

UniPoly UniPoly::shift_up(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<Rational> c(coeffs_.size() + k, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i + k] = coeffs_[i];
    return UniPoly(var_, std::move(c));
}

std::pair<UniPoly, UniPoly> UniPoly::divrem(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw zero_polynomial_error();
    std::vector<Rational> rem = a.coeffs_;
    int db = b.degree();
    int dq = a.degree() - db;
    if (dq < 0) return {UniPoly(a.var_), a};
    std::vector<Rational> quot(static_cast<std::size_t>(dq) + 1, Rational(0));
    const Rational& lb = b.leading();
    for (int k = dq; k >= 0; --k) {
        Rational q = rem[static_cast<std::size_t>(k + db)] / lb;
        if (q != 0) {
            quot[static_cast<std::size_t>(k)] = q;
            for (int i = 0; i <= db; ++i)
                rem[static_cast<std::size_t>(k + i)] -= q * b.coeffs_[static_cast<std::size_t>(i)];
        }
    }
    rem.resize(static_cast<std::size_t>(std::max(db, 0)));
    return {UniPoly(a.var_, std::move(quot)), UniPoly(a.var_, std::move(rem))};
}

UniPoly UniPoly::exact_div(const UniPoly& a, const UniPoly& b) {
    auto [q, r] = divrem(a, b);
    if (!r.is_zero()) throw solver_error("exact_div: division is not exact");
    return q;
}

UniPoly UniPoly::primitive_normalized() const {
    if (is_zero()) return *this;
    Int den_lcm(1), num_gcd(0);
    for (const auto& c : coeffs_) {
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
    }
    Rational scale = make_rational(den_lcm, num_gcd);
    if (sign(leading()) < 0) scale = -scale;
    return scale * *this;
}

bool UniPoly::is_integer_primitive() const {
    if (is_zero()) return true;
    Int g(0);
    for (const auto& c : coeffs_) {
        if (c.get_den() != 1) return false;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num().get_mpz_t());
    }
    return g == 1;
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    return (Rational(1) / leading()) * *this;
}

std::string UniPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = coeffs_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        if (!first) os << (sign(c) > 0 ? " + " : " - ");
        else if (sign(c) < 0) os << "-";
        first = false;
        Rational a = abs(c);
        if (a != 1 || i == 0) os << to_string(a);
        if (i > 0) {
            if (a != 1) os << "*";
            os << var_;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

namespace {

// (a mod b) scaled by a power of lc(b); only used where the result is
// re-normalized, so the scale factor is irrelevant.
UniPoly pseudo_rem(UniPoly a, const UniPoly& b) {
    int db = b.degree();
    const Rational lb = b.leading();
    while (!a.is_zero() && a.degree() >= db) {
        UniPoly t = a.leading() * b.shift_up(static_cast<std::size_t>(a.degree() - db));
        a = lb * a - t;
    }
    return a;
}

}  // namespace

UniPoly gcd_uni(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() && b.is_zero()) throw both_zero_error();
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    // Primitive PRS over Z: contains coefficient growth.
    UniPoly u = a.primitive_normalized();
    UniPoly v = b.primitive_normalized();
    if (u.degree() < v.degree()) std::swap(u, v);
    while (!v.is_zero()) {
        if (v.degree() == 0) return UniPoly::constant(a.var(), Rational(1));
        UniPoly r = pseudo_rem(u, v);
        u = v;
        v = r.is_zero() ? r : r.primitive_normalized();
    }
    return u.monic();
}

UniPoly square_free_part(const UniPoly& p) {
    if (p.is_zero()) throw zero_polynomial_error();
    if (p.degree() == 0) return UniPoly::constant(p.var(), Rational(1));
    UniPoly g = gcd_uni(p, p.derivative());
    return UniPoly::exact_div(p, g).primitive_normalized();
}

std::vector<std::pair<UniPoly, int>> yun_decomposition(const UniPoly& p) {
    if (p.is_zero()) throw zero_polynomial_error();
    if (p.degree() == 0) throw constant_polynomial_error();
    std::vector<std::pair<UniPoly, int>> out;
    UniPoly dp = p.derivative();
    UniPoly g = gcd_uni(p, dp);
    UniPoly c = UniPoly::exact_div(p, g);
    UniPoly d = UniPoly::exact_div(dp, g) - c.derivative();
    int i = 1;
    while (c.degree() > 0) {
        UniPoly a = gcd_uni(c, d);
        if (a.degree() > 0) out.emplace_back(a.primitive_normalized(), i);
        c = UniPoly::exact_div(c, a);
        d = UniPoly::exact_div(d, a) - c.derivative();
        ++i;
    }
    return out;
}

int sturm_count(const UniPoly& p, const Interval& interval) {
    if (p.is_zero()) throw zero_polynomial_error();
    if (p.sign_at(interval.lo) == 0 || p.sign_at(interval.hi) == 0)
        throw endpoint_is_root_error();
    if (p.degree() == 0) return 0;
    // Chain with positive primitive scaling of each remainder; scaling by a
    // positive constant does not change endpoint signs.
    std::vector<UniPoly> chain;
    chain.push_back(p);
    chain.push_back(p.derivative());
    while (!chain.back().is_zero()) {
        auto [q, r] = UniPoly::divrem(chain[chain.size() - 2], chain.back());
        (void)q;
        if (r.is_zero()) break;
        UniPoly nr = -r;
        UniPoly norm = nr.primitive_normalized();
        if (sign(norm.leading()) != sign(nr.leading())) norm = -norm;
        chain.push_back(norm);
    }
    auto variations = [&chain](const Rational& x) {
        int count = 0, prev = 0;
        for (const auto& q : chain) {
            int s = q.sign_at(x);
            if (s == 0) continue;
            if (prev != 0 && s != prev) ++count;
            prev = s;
        }
        return count;
    };
    return variations(interval.lo) - variations(interval.hi);
}

}  // namespace bisolve
