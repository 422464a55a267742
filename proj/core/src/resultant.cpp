#include "bisolve/resultant.hpp"

#include <algorithm>
#include <thread>

#include "bisolve/errors.hpp"

namespace bisolve {

namespace {

char surviving(char eliminate) { return eliminate == 'x' ? 'y' : 'x'; }

}  // namespace

SylvesterMatrix sylvester_matrix(const BiPoly& f, const BiPoly& g, char eliminate) {
    char s = surviving(eliminate);
    auto cf = f.coeffs_in(eliminate);  // UniPolys in s, ascending in eliminate
    auto cg = g.coeffs_in(eliminate);
    int df = static_cast<int>(cf.size()) - 1;
    int dg = static_cast<int>(cg.size()) - 1;
    SylvesterMatrix m;
    m.dim = df + dg;
    m.rows.assign(static_cast<std::size_t>(m.dim),
                  std::vector<UniPoly>(static_cast<std::size_t>(m.dim), UniPoly(s)));
    for (int r = 0; r < dg; ++r)
        for (int k = 0; k <= df; ++k)
            m.rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + k)] =
                cf[static_cast<std::size_t>(df - k)];
    for (int r = 0; r < df; ++r)
        for (int k = 0; k <= dg; ++k)
            m.rows[static_cast<std::size_t>(dg + r)][static_cast<std::size_t>(r + k)] =
                cg[static_cast<std::size_t>(dg - k)];
    return m;
}

Rational resultant_uni(const UniPoly& a_in, const UniPoly& b_in) {
    if (a_in.is_zero() || b_in.is_zero()) return Rational(0);
    UniPoly a = a_in, b = b_in;
    Rational acc(1);
    if (a.degree() == 0 && b.degree() == 0) return Rational(1);
    if (a.degree() < b.degree()) {
        if ((a.degree() * b.degree()) % 2 == 1) acc = -acc;
        std::swap(a, b);
    }
    // Euclidean PRS with primitive rescaling of each remainder; the removed
    // scale c contributes c^deg(b) by multilinearity of the determinant.
    while (true) {
        if (b.degree() == 0) {
            acc *= pow_int(b.leading(), static_cast<unsigned long>(a.degree()));
            return acc;
        }
        auto [q, r] = UniPoly::divrem(a, b);
        (void)q;
        if (r.is_zero()) return Rational(0);
        int m = a.degree(), n = b.degree(), d = r.degree();
        if ((m * n) % 2 == 1) acc = -acc;
        acc *= pow_int(b.leading(), static_cast<unsigned long>(m - d));
        UniPoly rn = r.primitive_normalized();
        // keep the sign of r so the tracked scale stays positive
        if (sign(rn.leading()) != sign(r.leading())) rn = -rn;
        Rational c = r.leading() / rn.leading();
        acc *= pow_int(c, static_cast<unsigned long>(n));
        a = b;
        b = rn;
    }
}

UniPoly resultant_bareiss(const BiPoly& f, const BiPoly& g, char eliminate,
                          const std::function<void()>& checkpoint) {
    char s = surviving(eliminate);
    SylvesterMatrix sm = sylvester_matrix(f, g, eliminate);
    int n = sm.dim;
    if (n == 0) return UniPoly::constant(s, Rational(1));
    auto& m = sm.rows;
    int det_sign = 1;
    UniPoly prev = UniPoly::constant(s, Rational(1));
    for (int k = 0; k + 1 < n; ++k) {
        if (checkpoint) checkpoint();
        if (m[k][k].is_zero()) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (!m[i][k].is_zero()) { piv = i; break; }
            if (piv < 0) return UniPoly(s);  // zero column: determinant 0
            std::swap(m[static_cast<std::size_t>(k)], m[static_cast<std::size_t>(piv)]);
            det_sign = -det_sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                UniPoly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = UniPoly::exact_div(num, prev);
            }
            m[i][k] = UniPoly(s);
        }
        prev = m[k][k];
    }
    UniPoly det = m[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 1)];
    return det_sign < 0 ? -det : det;
}

UniPoly resultant_interp(const BiPoly& f, const BiPoly& g, char eliminate, int workers,
                         const std::function<void()>& checkpoint) {
    char v = eliminate, s = surviving(eliminate);
    auto cf = f.coeffs_in(v);
    auto cg = g.coeffs_in(v);
    UniPoly lcf = cf.back(), lcg = cg.back();
    // deg bound of the determinant in the surviving variable
    long bound = static_cast<long>(f.deg(s)) * g.deg(v) + static_cast<long>(f.deg(v)) * g.deg(s);
    std::size_t npoints = static_cast<std::size_t>(bound + 1);
    std::vector<Rational> nodes;
    nodes.reserve(npoints);
    for (long k = 0; nodes.size() < npoints; k = k >= 0 ? -(k + 1) : -k) {
        Rational x0(k);
        if (lcf.eval(x0) == 0 || lcg.eval(x0) == 0) continue;  // degree would drop
        nodes.push_back(x0);
    }
    std::vector<Rational> values(npoints);
    workers = std::max(workers, 1);
    auto work = [&](std::size_t begin, std::size_t step) {
        for (std::size_t i = begin; i < npoints; i += step) {
            if (checkpoint && begin == 0) checkpoint();
            values[i] = resultant_uni(f.substitute(s, nodes[i]), g.substitute(s, nodes[i]));
        }
    };
    if (workers == 1 || npoints < 2) {
        work(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (int w = 1; w < workers; ++w)
            pool.emplace_back(work, static_cast<std::size_t>(w), static_cast<std::size_t>(workers));
        std::exception_ptr err;
        try {
            work(0, static_cast<std::size_t>(workers));
        } catch (...) {
            err = std::current_exception();
        }
        for (auto& t : pool) t.join();
        if (err) std::rethrow_exception(err);
    }
    // Newton divided differences, then expand to the monomial basis.
    std::vector<Rational> dd = values;
    for (std::size_t level = 1; level < npoints; ++level) {
        if (checkpoint) checkpoint();
        for (std::size_t i = npoints - 1; i >= level; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / (nodes[i] - nodes[i - level]);
            if (i == level) break;
        }
    }
    UniPoly p = UniPoly::constant(s, dd.back());
    for (std::size_t i = npoints - 1; i-- > 0;) {
        UniPoly lin(s, {-nodes[i], Rational(1)});
        p = p * lin + UniPoly::constant(s, dd[i]);
    }
    return p;
}

UniPoly resultant(const BiPoly& f, const BiPoly& g, char eliminate, int workers,
                  const std::function<void()>& checkpoint) {
    if (f.is_zero() || g.is_zero()) throw zero_polynomial_error();
    char v = eliminate, s = surviving(eliminate);
    int dvf = f.deg(v), dvg = g.deg(v);
    if (dvf <= 0 && dvg <= 0) throw degree_zero_in_eliminated_var();
    // One input free of the eliminated variable: the Sylvester determinant
    // degenerates to a power of it.
    if (dvf <= 0) return f.substitute(v, Rational(0)).pow(static_cast<unsigned long>(dvg));
    if (dvg <= 0) return g.substitute(v, Rational(0)).pow(static_cast<unsigned long>(dvf));
    int dim = dvf + dvg;
    int entry_deg = std::max(f.deg(s), g.deg(s));
    if (dim <= 14 && entry_deg <= 12) return resultant_bareiss(f, g, eliminate, checkpoint);
    return resultant_interp(f, g, eliminate, workers, checkpoint);
}

UniPoly no_extr_res(const BiPoly& f, const BiPoly& g, char eliminate, int workers,
                    const std::function<void()>& checkpoint) {
    UniPoly raw = resultant(f, g, eliminate, workers, checkpoint);
    if (raw.is_zero()) throw not_zero_dimensional();
    return square_free_part(raw);
}

bool specialization_check(const BiPoly& f, const BiPoly& g, const Rational& x0) {
    auto cf = f.coeffs_in('y');
    auto cg = g.coeffs_in('y');
    if (cf.back().eval(x0) == 0 || cg.back().eval(x0) == 0)
        throw leading_coefficient_vanishes();
    Rational lhs = resultant(f, g, 'y').eval(x0);
    Rational rhs = resultant_uni(f.substitute('x', x0), g.substitute('x', x0));
    return lhs == rhs;
}

}  // namespace bisolve
