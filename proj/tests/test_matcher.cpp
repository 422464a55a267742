#include <doctest.h>

#include <random>

#include "bisolve/matcher.hpp"
#include "bisolve/report.hpp"
#include "bisolve/resultant.hpp"

#include "util.hpp"

using namespace bisolve;
using testutil::P;

namespace {

struct Prepared {
    UniPoly t_sf, T_sf;
    std::vector<IsolatedRoot> sx, sy;
    BoundParams params;
};

Prepared prepare(const BiPoly& f, const BiPoly& g, EpsilonMode mode = EpsilonMode::safe,
                 std::optional<Rational> manual_eps = std::nullopt) {
    Prepared p;
    p.t_sf = no_extr_res(f, g, 'y');
    p.T_sf = no_extr_res(f, g, 'x');
    p.sx = isolate_real_roots(p.t_sf);
    p.sy = isolate_real_roots(p.T_sf);
    p.params = compute_params(f, g, p.t_sf, p.T_sf, mode, manual_eps);
    return p;
}

Rational pow10_neg(int k) {
    Rational r(1);
    for (int i = 0; i < k; ++i) r = r / 10;
    return r;
}

}  // namespace

TEST_CASE("classify_pair: exact rational root") {
    BiPoly f = P("x - y"), g = P("x + y - 2");
    Prepared p = prepare(f, g);
    REQUIRE(p.sx.size() == 1);
    REQUIRE(p.sy.size() == 1);
    auto verdict = classify_pair(f, g, {p.sx[0], p.sy[0], 0, 0}, p.params);
    REQUIRE(verdict.has_value());
    CHECK(verdict->f_certified_zero);
    CHECK(verdict->g_certified_zero);
    CHECK(verdict->x_interval.contains(Rational(1)));
    CHECK(verdict->y_interval.contains(Rational(1)));
}

TEST_CASE("circle and line: cross pairs rejected") {
    BiPoly f = P("x^2 + y^2 - 1"), g = P("x - y");
    Prepared p = prepare(f, g);
    REQUIRE(p.sx.size() == 2);
    REQUIRE(p.sy.size() == 2);

    // cross pair (alpha ~ 0.7071, beta ~ -0.7071) is not a root
    CHECK_FALSE(classify_pair(f, g, {p.sx[1], p.sy[0], 1, 0}, p.params).has_value());
    CHECK_FALSE(classify_pair(f, g, {p.sx[0], p.sy[1], 0, 1}, p.params).has_value());

    auto sols = match_all(f, g, p.sx, p.sy, p.params);
    REQUIRE(sols.size() == 2);
    // grid indices are 1-based
    CHECK(sols[0].i == 1);
    CHECK(sols[0].j == 1);
    CHECK(sols[1].i == 2);
    CHECK(sols[1].j == 2);
}

TEST_CASE("worked example: two matches") {
    BiPoly f = P("x^2 - y^2 - 3"), g = P("3*x^2 - 2*y^3 - 1");
    Prepared p = prepare(f, g);
    auto sols = match_all(f, g, p.sx, p.sy, p.params);
    REQUIRE(sols.size() == 2);
    CHECK(sols[0].multiplicity_hint == std::pair<int, int>{1, 1});
}

TEST_CASE("separable grid system matches the full grid") {
    BiPoly f = P("(x - 1)*(x - 2)"), g = P("(y - 3)*(y - 4)");
    Prepared p = prepare(f, g);
    auto sols = match_all(f, g, p.sx, p.sy, p.params);
    REQUIRE(sols.size() == 4);
    int k = 0;
    for (long a : {1, 2})
        for (long b : {3, 4}) {
            CHECK(sols[k].x_interval.contains(Rational(a)));
            CHECK(sols[k].y_interval.contains(Rational(b)));
            ++k;
        }
}

TEST_CASE("soundness: high-precision substitution oracle") {
    BiPoly f = P("x^2 + y^2 - 1"), g = P("x - y");
    Prepared p = prepare(f, g);
    auto sols = match_all(f, g, p.sx, p.sy, p.params);
    Rational tol = pow10_neg(50);
    for (const auto& s : sols) {
        IsolatedRoot rx = refine({p.t_sf, s.x_interval, 1, s.i}, pow10_neg(60));
        IsolatedRoot ry = refine({p.T_sf, s.y_interval, 1, s.j}, pow10_neg(60));
        Rational x0 = rx.interval.midpoint(), y0 = ry.interval.midpoint();
        CHECK(abs(f.eval(x0, y0)) < tol);
        CHECK(abs(g.eval(x0, y0)) < tol);
    }
}

TEST_CASE("match_all is deterministic across worker counts") {
    BiPoly f = P("x^2 - y^2 - 3"), g = P("3*x^2 - 2*y^3 - 1");
    Prepared p = prepare(f, g);
    MatchOptions one, two, eight;
    two.workers = 2;
    eight.workers = 8;
    auto s1 = match_all(f, g, p.sx, p.sy, p.params, one);
    auto s2 = match_all(f, g, p.sx, p.sy, p.params, two);
    auto s8 = match_all(f, g, p.sx, p.sy, p.params, eight);
    REQUIRE(s1.size() == s2.size());
    REQUIRE(s1.size() == s8.size());
    for (std::size_t k = 0; k < s1.size(); ++k) {
        CHECK(s1[k].x_interval == s2[k].x_interval);
        CHECK(s1[k].x_interval == s8[k].x_interval);
        CHECK(s1[k].y_interval == s2[k].y_interval);
        CHECK(s1[k].y_interval == s8[k].y_interval);
        CHECK(s1[k].i == s8[k].i);
        CHECK(s1[k].j == s8[k].j);
    }
}

TEST_CASE("multiplicity_cluster is a no-op for well-separated roots") {
    BiPoly f = P("(x - 1)*(x - 2)"), g = P("(y - 3)*(y - 4)");
    Prepared p = prepare(f, g);
    auto sols = match_all(f, g, p.sx, p.sy, p.params);
    auto clustered = multiplicity_cluster(sols, p.params);
    REQUIRE(clustered.size() == sols.size());
    for (const auto& s : clustered) CHECK_FALSE(s.cluster_flag);
}

TEST_CASE("multiplicity_cluster merges pairs closer than epsilon") {
    // Oversized manual epsilon makes every matched pair one cluster.
    BiPoly f = P("(x - 1)*(x - 2)"), g = P("(y - 3)*(y - 4)");
    Prepared p = prepare(f, g, EpsilonMode::manual, Rational(10));
    auto sols = match_all(f, g, p.sx, p.sy, p.params);
    REQUIRE(sols.size() == 4);
    auto clustered = multiplicity_cluster(sols, p.params);
    REQUIRE(clustered.size() == 1);
    CHECK(clustered[0].cluster_flag);
    CHECK(clustered[0].x_interval.contains(Rational(1)));
    CHECK(clustered[0].x_interval.contains(Rational(2)));
    CHECK(clustered[0].y_interval.contains(Rational(3)));
    CHECK(clustered[0].y_interval.contains(Rational(4)));
}

TEST_CASE("refinement budget") {
    BiPoly f = P("x^2 - y^2 - 3"), g = P("3*x^2 - 2*y^3 - 1");
    // Tiny manual epsilon: certifying a true zero needs ~100 bisections,
    // which a budget of 2 cannot reach.
    Prepared p = prepare(f, g, EpsilonMode::manual, pow10_neg(30));
    MatchOptions opts;
    opts.refinement_budget = 2;
    CHECK_THROWS_AS(match_all(f, g, p.sx, p.sy, p.params, opts),
                    refinement_budget_exceeded);
}
