#include <doctest.h>

#include "bisolve/bench.hpp"
#include "bisolve/parser.hpp"
#include "bisolve/report.hpp"
#include "bisolve/solver.hpp"

#include "util.hpp"

using namespace bisolve;
using testutil::P;

TEST_CASE("parser accepts the grammar") {
    ParsedSystem s = parse_system("x^2 - y^2 - 3; 3*x^2 - 2*y^3 - 1");
    CHECK(s.f == P("x^2 - y^2 - 3"));
    CHECK(s.g.coeff(0, 3) == -2);

    CHECK(P("x - y").deg_x() == 1);
    CHECK(P("1/2*x + 2/3").coeff(1, 0) == make_rational(1, 2));
    CHECK(P("(x + y)^2") == P("x^2 + 2*x*y + y^2"));
    CHECK(P("-x + 3") == P("3 - x"));
    CHECK(P("x^0 + y") == P("1 + y"));
}

TEST_CASE("parser rejects bad input") {
    CHECK_THROWS_AS(parse_poly("x^2 - - 3"), parse_error);
    try {
        parse_poly("x^2 - - 3");
    } catch (const parse_error& e) {
        CHECK(e.position == 6);  // the second '-'
    }
    CHECK_THROWS_AS(parse_poly("2x"), parse_error);       // implicit multiplication
    CHECK_THROWS_AS(parse_poly("x + z"), parse_error);    // unknown variable
    CHECK_THROWS_AS(parse_poly("x^(2)"), parse_error);    // exponent must be a uint
    CHECK_THROWS_AS(parse_poly(""), parse_error);
    CHECK_THROWS_AS(parse_system("x - y"), parse_error);  // missing ';'
    CHECK_THROWS_AS(parse_poly("x - x"), zero_polynomial_error);
    CHECK_THROWS_AS(parse_poly("3"), solver_error);  // must mention x or y
}

TEST_CASE("solve: worked example trace") {
    ParsedSystem s = parse_system("x^2 - y^2 - 3; 3*x^2 - 2*y^3 - 1");
    SolveReport r = solve({s.f, s.g, ""});
    CHECK(r.t_raw == UniPoly::from_ints('x', {-109, 0, 114, 0, -45, 0, 4}));
    CHECK(r.T_sf == UniPoly::from_ints('y', {-8, 0, -3, 2}));
    REQUIRE(r.solutions.size() == 2);
    CHECK(r.sx.size() == 2);
    CHECK(r.sy.size() == 1);
    for (const auto& sol : r.solutions) {
        CHECK(sol.f_certified_zero);
        CHECK(sol.g_certified_zero);
        CHECK_FALSE(sol.cluster_flag);
    }
}

TEST_CASE("solve: linear pair") {
    ParsedSystem s = parse_system("x - y; x + y - 2");
    SolveReport r = solve({s.f, s.g, ""});
    REQUIRE(r.solutions.size() == 1);
    CHECK(r.solutions[0].x_interval.contains(Rational(1)));
    CHECK(r.solutions[0].y_interval.contains(Rational(1)));
}

TEST_CASE("solve: identical curves rejected") {
    ParsedSystem s = parse_system("x - y; x - y");
    CHECK_THROWS_AS(solve({s.f, s.g, ""}), not_zero_dimensional);
}

TEST_CASE("decimal approximations") {
    CHECK(decimal_approx(make_rational(1, 3), 4) == "0.3333");
    CHECK(decimal_approx(Rational(-2), 3) == "-2.00");
    CHECK(decimal_approx(make_rational(999999, 1000), 4) == "1000");
    CHECK(decimal_approx(make_rational(1, 1000000), 3) == "1.00e-6");
    CHECK(decimal_approx(Rational(0), 5) == "0");
    CHECK(decimal_to_rational("0.3333") == make_rational(3333, 10000));
    CHECK(decimal_to_rational("1.00e-6") == make_rational(1, 1000000));
    CHECK(decimal_to_rational("-2.5") == make_rational(-5, 2));
}

TEST_CASE("report decimals lie inside their intervals") {
    ParsedSystem s = parse_system("x^2 - y^2 - 3; 3*x^2 - 2*y^3 - 1");
    SolveReport r = solve({s.f, s.g, ""});
    for (const auto& root : r.sx)
        CHECK(root.interval.contains(decimal_to_rational(root.decimal)));
    for (const auto& root : r.sy)
        CHECK(root.interval.contains(decimal_to_rational(root.decimal)));
    for (const auto& sol : r.solutions) {
        CHECK(sol.x_interval.contains(decimal_to_rational(sol.x_decimal)));
        CHECK(sol.y_interval.contains(decimal_to_rational(sol.y_decimal)));
    }
    // printed projection roots agree with the known values to 10 digits
    Rational tol = make_rational(5, 1000000000);
    CHECK(abs(decimal_to_rational(r.sx[1].decimal) - make_rational(2858288520, 1000000000)) <
          tol);
    CHECK(abs(decimal_to_rational(r.sy[0].decimal) - make_rational(2273722337, 1000000000)) <
          tol);
}

TEST_CASE("report JSON round-trip is lossless") {
    ParsedSystem s = parse_system("x^2 - y^2 - 3; 3*x^2 - 2*y^3 - 1");
    SolveReport r = solve({s.f, s.g, ""});
    std::string j1 = report_to_json(r, true);
    std::string j2 = report_to_json(report_from_json(j1), true);
    CHECK(j1 == j2);
    std::string bare1 = report_to_json(r, false);
    std::string bare2 = report_to_json(report_from_json(bare1), false);
    CHECK(bare1 == bare2);
    CHECK(bare1.find("timings") == std::string::npos);
}

TEST_CASE("bench_generate is deterministic and family-shaped") {
    BenchConfig cfg;
    cfg.family = BenchFamily::dense;
    cfg.degree = 4;
    cfg.seed = 42;
    auto a = bench_generate(cfg);
    auto b = bench_generate(cfg);
    REQUIRE(a.size() == b.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
        CHECK(a[k].f == b[k].f);
        CHECK(a[k].g == b[k].g);
    }

    BenchConfig sparse;
    sparse.family = BenchFamily::sparse;
    sparse.degree = 10;
    sparse.instances = 5;
    for (const auto& sys : bench_generate(sparse)) {
        CHECK(sys.f.terms().size() <= 6);
        CHECK(sys.g.terms().size() <= 6);
    }

    BenchConfig multi;
    multi.family = BenchFamily::multiple_root;
    multi.degree = 3;
    multi.coeff_bound = 5;
    multi.instances = 3;
    for (const auto& sys : bench_generate(multi)) {
        // g = df/dy holds identically
        CHECK(sys.g == sys.f.derivative('y'));
    }
}

TEST_CASE("bench_run rows and determinism") {
    BenchConfig cfg;
    cfg.family = BenchFamily::dense;
    cfg.degree = 4;
    cfg.instances = 5;
    cfg.seed = 7;
    cfg.time_budget_sec = 120;
    BenchResult r1 = bench_run(cfg);
    REQUIRE(r1.rows.size() == 5);
    for (const auto& row : r1.rows) {
        CHECK(row.status == "ok");
        CHECK(row.solutions >= 0);
    }
    BenchResult r2 = bench_run(cfg);
    for (std::size_t k = 0; k < 5; ++k) CHECK(r1.rows[k].solutions == r2.rows[k].solutions);

    std::string table = bench_table(r1);
    CHECK(table.find("solutions") != std::string::npos);
    std::string json = bench_to_json(r1);
    CHECK(json.find("\"rows\"") != std::string::npos);
}

TEST_CASE("solve honours an expired deadline") {
    ParsedSystem s = parse_system("x^2 - y^2 - 3; 3*x^2 - 2*y^3 - 1");
    SolveOptions opts;
    opts.deadline = std::chrono::steady_clock::now() - std::chrono::seconds(1);
    CHECK_THROWS_AS(solve({s.f, s.g, ""}, opts), time_budget_exceeded);
}
