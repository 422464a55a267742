#include "bisolve/isolation.hpp"

#include <algorithm>
#include <deque>

#include "bisolve/errors.hpp"

namespace bisolve {

Rational cauchy_bound(const UniPoly& p) {
    if (p.is_zero()) throw zero_polynomial_error();
    if (p.degree() == 0) throw constant_polynomial_error();
    Rational mx(0);
    for (int i = 0; i < p.degree(); ++i)
        mx = std::max(mx, abs(p[static_cast<std::size_t>(i)]));
    return Rational(1) + mx / abs(p.leading());
}

namespace {

// Coefficients of p(a + (b-a) x): Taylor shift by a, then scale x -> (b-a) x.
std::vector<Rational> shift_scale(const UniPoly& p, const Rational& a, const Rational& b) {
    std::size_t n = p.coeffs().size();
    std::vector<Rational> c = p.coeffs();
    // Taylor shift by a via repeated synthetic (Horner) passes.
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = n - 1; j >= i + 1; --j) c[j - 1] += a * c[j];
    Rational w = b - a, pw(1);
    for (std::size_t i = 1; i < n; ++i) {
        pw *= w;
        c[i] *= pw;
    }
    return c;
}

int variations(const std::vector<Rational>& c) {
    int count = 0, prev = 0;
    for (const auto& v : c) {
        int s = sgn(v);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

}  // namespace

int descartes_variations(const UniPoly& p, const Rational& a, const Rational& b) {
    // Roots of p in (a, b) correspond to roots of q(x) = p(a + (b-a)x) in
    // (0, 1), counted by the sign variations of (1+x)^n q(1/(1+x)):
    // reverse the coefficients, then Taylor shift by 1.
    std::vector<Rational> c = shift_scale(p, a, b);
    std::reverse(c.begin(), c.end());
    std::size_t n = c.size();
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = n - 1; j >= i + 1; --j) c[j - 1] += c[j];
    return variations(c);
}

std::vector<IsolatedRoot> isolate_real_roots(const UniPoly& p,
                                             const std::function<void()>& checkpoint) {
    if (p.is_zero()) throw zero_polynomial_error();
    if (p.degree() == 0) return {};
    if (gcd_uni(p, p.derivative()).degree() != 0) throw not_square_free_error();

    std::vector<Interval> found;
    Rational B = cauchy_bound(p);
    std::deque<Interval> work;
    work.push_back({-B, B});
    while (!work.empty()) {
        if (checkpoint) checkpoint();
        Interval iv = work.front();
        work.pop_front();
        int var = descartes_variations(p, iv.lo, iv.hi);
        if (var == 0) continue;
        if (var == 1 && p.sign_at(iv.lo) != 0 && p.sign_at(iv.hi) != 0) {
            found.push_back(iv);
            continue;
        }
        Rational m = iv.midpoint();
        if (p.sign_at(m) == 0) found.push_back({m, m});
        work.push_back({iv.lo, m});
        work.push_back({m, iv.hi});
    }
    std::sort(found.begin(), found.end(),
              [](const Interval& a, const Interval& b) { return a.lo < b.lo; });

    std::vector<IsolatedRoot> roots;
    roots.reserve(found.size());
    for (std::size_t i = 0; i < found.size(); ++i)
        roots.push_back({p, found[i], 1, static_cast<int>(i)});

    // Bisection cells can share an endpoint; shrink until the closed
    // intervals are pairwise disjoint.
    for (std::size_t i = 0; i + 1 < roots.size(); ++i) {
        while (roots[i].interval.hi >= roots[i + 1].interval.lo) {
            roots[i] = refine_steps(roots[i], 1);
            roots[i + 1] = refine_steps(roots[i + 1], 1);
        }
        roots[i].index = static_cast<int>(i);
    }
    return roots;
}

IsolatedRoot refine_steps(const IsolatedRoot& root, long count) {
    IsolatedRoot r = root;
    for (long k = 0; k < count && !r.interval.is_point(); ++k) {
        Rational m = r.interval.midpoint();
        int sm = r.defining_poly.sign_at(m);
        if (sm == 0) {
            r.interval = {m, m};
            break;
        }
        int slo = r.defining_poly.sign_at(r.interval.lo);
        if (slo != 0 && slo != sm) {
            r.interval.hi = m;
        } else if (slo == 0) {
            // Endpoint sits on a root of a *different* polynomial's cell only
            // during endpoint separation; fall back on the Descartes count.
            if (descartes_variations(r.defining_poly, r.interval.lo, m) == 1)
                r.interval.hi = m;
            else
                r.interval.lo = m;
        } else {
            r.interval.lo = m;
        }
    }
    return r;
}

IsolatedRoot refine(const IsolatedRoot& root, const Rational& target_width) {
    IsolatedRoot r = root;
    while (!r.interval.is_point() && r.interval.width() > target_width)
        r = refine_steps(r, 1);
    return r;
}

int raw_multiplicity(const UniPoly& raw, const IsolatedRoot& root) {
    auto factors = yun_decomposition(raw);
    IsolatedRoot r = root;
    for (int attempt = 0; attempt < 128; ++attempt) {
        if (r.is_rational()) {
            for (const auto& [factor, mult] : factors)
                if (factor.sign_at(r.interval.lo) == 0) return mult;
            throw no_matching_factor_error();
        }
        int hits = 0, hit_mult = 0;
        bool endpoint_trouble = false;
        for (const auto& [factor, mult] : factors) {
            try {
                int c = sturm_count(factor, r.interval);
                if (c > 0) {
                    ++hits;
                    hit_mult = mult;
                }
            } catch (const endpoint_is_root_error&) {
                endpoint_trouble = true;
            }
        }
        if (!endpoint_trouble && hits == 1) return hit_mult;
        if (!endpoint_trouble && hits == 0) throw no_matching_factor_error();
        r = refine_steps(r, 2);  // shed foreign roots / bad endpoints
    }
    throw no_matching_factor_error();
}

}  // namespace bisolve
