#include <doctest.h>

#include <random>

#include "bisolve/isolation.hpp"

#include "util.hpp"

using namespace bisolve;
using testutil::rand_unipoly;

namespace {

const UniPoly t_ex = UniPoly::from_ints('x', {-109, 0, 114, 0, -45, 0, 4});
const UniPoly T_sf_ex = UniPoly::from_ints('y', {-8, 0, -3, 2});

// |interval midpoint - v| after refining to width tol/4
void check_root_near(const IsolatedRoot& root, const Rational& v, const Rational& tol) {
    IsolatedRoot r = refine(root, tol / 4);
    CHECK(abs(r.interval.midpoint() - v) < tol);
}

}  // namespace

TEST_CASE("cauchy_bound") {
    CHECK(cauchy_bound(t_ex) == make_rational(59, 2));
    CHECK(cauchy_bound(UniPoly::from_ints('x', {-2, 0, 1})) == 3);
    CHECK(cauchy_bound(UniPoly::from_ints('x', {0, 0, 0, 1})) == 1);
    CHECK_THROWS_AS(cauchy_bound(UniPoly::constant('x', Rational(2))),
                    constant_polynomial_error);
    CHECK_THROWS_AS(cauchy_bound(UniPoly('x')), zero_polynomial_error);
}

TEST_CASE("isolate_real_roots on the worked projections") {
    auto rx = isolate_real_roots(t_ex);
    REQUIRE(rx.size() == 2);
    Rational alpha = make_rational(2858288520, 1000000000);
    check_root_near(rx[0], -alpha, make_rational(1, 1000000000));
    check_root_near(rx[1], alpha, make_rational(1, 1000000000));

    auto ry = isolate_real_roots(T_sf_ex);
    REQUIRE(ry.size() == 1);
    check_root_near(ry[0], make_rational(2273722337, 1000000000), make_rational(1, 1000000000));
}

TEST_CASE("rational roots may come back degenerate") {
    auto roots = isolate_real_roots(UniPoly::from_ints('x', {-4, 0, 1}));
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].interval.contains(Rational(-2)));
    CHECK(roots[1].interval.contains(Rational(2)));
    for (const auto& r : roots)
        if (r.is_rational()) CHECK(r.defining_poly.sign_at(r.interval.lo) == 0);
}

TEST_CASE("isolate_real_roots rejects bad inputs") {
    UniPoly sq = UniPoly::from_ints('x', {1, 2, 1});  // (x+1)^2
    CHECK_THROWS_AS(isolate_real_roots(sq), not_square_free_error);
    CHECK_THROWS_AS(isolate_real_roots(UniPoly('x')), zero_polynomial_error);
}

TEST_CASE("refine") {
    UniPoly p = UniPoly::from_ints('x', {-2, 0, 1});
    auto roots = isolate_real_roots(p);
    REQUIRE(roots.size() == 2);
    IsolatedRoot pos = roots[1];
    IsolatedRoot narrow = refine(pos, make_rational(1, 1024));
    CHECK(narrow.interval.width() <= make_rational(1, 1024));
    CHECK(narrow.interval.lo * narrow.interval.lo <= 2);
    CHECK(narrow.interval.hi * narrow.interval.hi >= 2);

    IsolatedRoot degenerate{p, Interval(Rational(7)), 1, 0};
    CHECK(refine(degenerate, make_rational(1, 1000)).interval == Interval(Rational(7)));

    auto ry = isolate_real_roots(T_sf_ex);
    IsolatedRoot fine = refine(ry[0], make_rational(1, Int("1000000000000")));
    CHECK(abs(fine.interval.midpoint() - make_rational(2273722337, 1000000000)) <
          make_rational(1, 1000000000));
}

TEST_CASE("raw_multiplicity") {
    UniPoly base = UniPoly::from_ints('y', {8, 0, 3, -2});
    UniPoly raw = base * base;
    auto roots = isolate_real_roots(square_free_part(raw));
    REQUIRE(roots.size() == 1);
    CHECK(raw_multiplicity(raw, roots[0]) == 2);

    UniPoly p = UniPoly::from_ints('x', {-2, 0, 1});
    auto r2 = isolate_real_roots(p);
    CHECK(raw_multiplicity(p, r2[1]) == 1);

    UniPoly m1 = UniPoly::from_ints('x', {-1, 1});
    UniPoly m2 = UniPoly::from_ints('x', {1, 1});
    UniPoly raw3 = m1 * m1 * m1 * m2;
    auto r3 = isolate_real_roots(square_free_part(raw3));
    REQUIRE(r3.size() == 2);
    CHECK(raw_multiplicity(raw3, r3[0]) == 1);  // root -1
    CHECK(raw_multiplicity(raw3, r3[1]) == 3);  // root 1
}

TEST_CASE("isolation count equals Sturm count on 200 random square-free polynomials") {
    std::mt19937_64 rng(61);
    int done = 0;
    while (done < 200) {
        UniPoly p = rand_unipoly(rng, 'x', 12, 20);
        if (p.degree() < 1 || gcd_uni(p, p.derivative()).degree() != 0) continue;
        Rational b = cauchy_bound(p);
        if (p.sign_at(-b) == 0 || p.sign_at(b) == 0) continue;
        auto roots = isolate_real_roots(p);
        CHECK(static_cast<int>(roots.size()) == sturm_count(p, {-b, b}));

        // intervals sorted, pairwise disjoint, each isolating
        for (std::size_t k = 0; k < roots.size(); ++k) {
            CHECK(roots[k].index == static_cast<int>(k));
            if (k > 0) CHECK(roots[k - 1].interval.hi < roots[k].interval.lo);
            if (!roots[k].is_rational()) {
                CHECK(p.sign_at(roots[k].interval.lo) * p.sign_at(roots[k].interval.hi) < 0);
                CHECK(sturm_count(p, roots[k].interval) == 1);
            } else {
                CHECK(p.sign_at(roots[k].interval.lo) == 0);
            }
        }
        ++done;
    }
}

TEST_CASE("refine never loses the root") {
    std::mt19937_64 rng(67);
    int done = 0;
    while (done < 40) {
        UniPoly p = rand_unipoly(rng, 'x', 8, 15);
        if (p.degree() < 1 || gcd_uni(p, p.derivative()).degree() != 0) continue;
        auto roots = isolate_real_roots(p);
        for (const auto& root : roots) {
            IsolatedRoot r = refine(root, make_rational(1, 1 << 20));
            if (r.is_rational()) {
                CHECK(p.sign_at(r.interval.lo) == 0);
            } else {
                CHECK(r.interval.width() <= make_rational(1, 1 << 20));
                CHECK(sturm_count(p, r.interval) == 1);
            }
            CHECK(root.interval.lo <= r.interval.lo);
            CHECK(r.interval.hi <= root.interval.hi);
        }
        ++done;
    }
}

TEST_CASE("descartes_variations exact cases") {
    UniPoly p = UniPoly::from_ints('x', {-2, 0, 1});
    CHECK(descartes_variations(p, Rational(1), Rational(2)) == 1);
    CHECK(descartes_variations(p, Rational(2), Rational(3)) == 0);
}
