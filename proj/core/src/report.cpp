#include "bisolve/report.hpp"

#include <sstream>

#include <json.hpp>

#include "bisolve/errors.hpp"

namespace bisolve {

namespace {

Int pow10_int(long e) {
    Int p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(e));
    return p;
}

Rational pow10_rat(long e) {
    Int p = pow10_int(e >= 0 ? e : -e);
    return e >= 0 ? Rational(p) : make_rational(Int(1), p);
}

long floor_log10(const Rational& a) {
    // a > 0. Estimate from bit lengths, then correct exactly.
    long e = static_cast<long>(
        (static_cast<double>(mpz_sizeinbase(a.get_num().get_mpz_t(), 2)) -
         static_cast<double>(mpz_sizeinbase(a.get_den().get_mpz_t(), 2))) *
        0.30102999566398);
    while (a >= pow10_rat(e + 1)) ++e;
    while (a < pow10_rat(e)) --e;
    return e;
}

}  // namespace

std::string decimal_approx(const Rational& v, int digits) {
    if (v == 0) return "0";
    std::string sign_str = sgn(v) < 0 ? "-" : "";
    Rational a = abs(v);
    long e = floor_log10(a);
    // mantissa = round(a * 10^(digits-1-e)), an integer with `digits` digits
    Rational scaled = a * pow10_rat(digits - 1 - e);
    Int m;
    // round half up
    mpz_fdiv_q(m.get_mpz_t(), Int(2 * scaled.get_num() + scaled.get_den()).get_mpz_t(),
               Int(2 * scaled.get_den()).get_mpz_t());
    std::string digs = m.get_str();
    if (static_cast<int>(digs.size()) > digits) {  // 999.96 -> 1000 rollover
        digs.pop_back();
        ++e;
    }
    std::ostringstream os;
    os << sign_str;
    if (e >= -4 && e < digits + 4) {
        if (e >= 0) {
            std::string ip = digs.substr(0, static_cast<std::size_t>(e) + 1);
            while (static_cast<long>(ip.size()) < e + 1) ip += '0';
            std::string fp = static_cast<std::size_t>(e) + 1 < digs.size()
                                 ? digs.substr(static_cast<std::size_t>(e) + 1)
                                 : "";
            os << ip;
            if (!fp.empty()) os << "." << fp;
        } else {
            os << "0." << std::string(static_cast<std::size_t>(-e - 1), '0') << digs;
        }
    } else {
        os << digs.substr(0, 1);
        if (digs.size() > 1) os << "." << digs.substr(1);
        os << "e" << e;
    }
    return os.str();
}

Rational decimal_to_rational(const std::string& s) {
    std::size_t epos = s.find_first_of("eE");
    std::string mant = epos == std::string::npos ? s : s.substr(0, epos);
    long exp10 = epos == std::string::npos ? 0 : std::stol(s.substr(epos + 1));
    bool neg = !mant.empty() && mant[0] == '-';
    if (neg || (!mant.empty() && mant[0] == '+')) mant.erase(0, 1);
    std::size_t dot = mant.find('.');
    std::string digits_only = mant;
    long frac = 0;
    if (dot != std::string::npos) {
        frac = static_cast<long>(mant.size() - dot - 1);
        digits_only.erase(dot, 1);
    }
    if (digits_only.empty()) throw solver_error("bad decimal: " + s);
    Rational v = Rational(int_from_string(digits_only)) * pow10_rat(exp10 - frac);
    return neg ? Rational(-v) : v;
}

std::string decimal_in_interval(const Interval& iv, int digits) {
    if (iv.is_point()) return decimal_approx(iv.lo, digits);
    Rational mid = iv.midpoint();
    for (int d = digits; d < digits + 2048; d += 2) {
        std::string s = decimal_approx(mid, d);
        Rational back = decimal_to_rational(s);
        if (iv.lo <= back && back <= iv.hi) return s;
    }
    throw solver_error("could not place a decimal inside the interval");
}

namespace {

using nlohmann::json;

json rat_j(const Rational& r) { return to_string(r); }

Rational rat_p(const json& j) {
    return rational_from_string(j.get<std::string>());
}

json interval_j(const Interval& iv) { return json{{"lo", rat_j(iv.lo)}, {"hi", rat_j(iv.hi)}}; }

Interval interval_p(const json& j) { return {rat_p(j.at("lo")), rat_p(j.at("hi"))}; }

json poly_j(const UniPoly& p) {
    json coeffs = json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(rat_j(c));
    return json{{"var", std::string(1, p.var())}, {"coeffs", coeffs}};
}

UniPoly poly_p(const json& j) {
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(rat_p(c));
    return UniPoly(j.at("var").get<std::string>()[0], std::move(coeffs));
}

json params_j(const BoundParams& b) {
    return json{{"N", rat_j(b.N)},
                {"M", rat_j(b.M)},
                {"s", b.s},
                {"c", rat_j(b.c)},
                {"mode", to_string(b.mode)},
                {"epsilon", rat_j(b.epsilon)},
                {"epsilon_log2", b.epsilon_log2},
                {"certified", b.certified}};
}

BoundParams params_p(const json& j) {
    BoundParams b;
    b.N = rat_p(j.at("N"));
    b.M = rat_p(j.at("M"));
    b.s = j.at("s").get<long>();
    b.c = rat_p(j.at("c"));
    b.mode = *epsilon_mode_from_string(j.at("mode").get<std::string>());
    b.epsilon = rat_p(j.at("epsilon"));
    b.epsilon_log2 = j.at("epsilon_log2").get<long>();
    b.certified = j.at("certified").get<bool>();
    return b;
}

json roots_j(const std::vector<RootReport>& roots) {
    json arr = json::array();
    for (const auto& r : roots)
        arr.push_back(json{{"interval", interval_j(r.interval)},
                           {"decimal", r.decimal},
                           {"raw_multiplicity", r.raw_multiplicity}});
    return arr;
}

std::vector<RootReport> roots_p(const json& arr) {
    std::vector<RootReport> out;
    for (const auto& j : arr)
        out.push_back({interval_p(j.at("interval")), j.at("decimal").get<std::string>(),
                       j.at("raw_multiplicity").get<int>()});
    return out;
}

}  // namespace

std::string report_to_json(const SolveReport& r, bool include_timings) {
    json sols = json::array();
    for (const auto& s : r.solutions) {
        sols.push_back(json{{"x_interval", interval_j(s.x_interval)},
                            {"y_interval", interval_j(s.y_interval)},
                            {"x_decimal", s.x_decimal},
                            {"y_decimal", s.y_decimal},
                            {"f_certified_zero", s.f_certified_zero},
                            {"g_certified_zero", s.g_certified_zero},
                            {"multiplicity_hint",
                             json::array({s.multiplicity_hint.first, s.multiplicity_hint.second})},
                            {"cluster_flag", s.cluster_flag},
                            {"i", s.i},
                            {"j", s.j}});
    }
    json out{{"f", r.f_text},
             {"g", r.g_text},
             {"t_raw", poly_j(r.t_raw)},
             {"t_sf", poly_j(r.t_sf)},
             {"T_raw", poly_j(r.T_raw)},
             {"T_sf", poly_j(r.T_sf)},
             {"params", params_j(r.params)},
             {"sx", roots_j(r.sx)},
             {"sy", roots_j(r.sy)},
             {"solutions", sols},
             {"digits", r.digits}};
    // Runtime provenance: excluded together with the timings so that
    // reports from different worker counts compare byte-identical.
    if (include_timings) {
        out["workers"] = r.workers;
        out["timings"] = json{{"project_x_ms", r.timings.project_x_ms},
                              {"project_y_ms", r.timings.project_y_ms},
                              {"squarefree_ms", r.timings.squarefree_ms},
                              {"bound_ms", r.timings.bound_ms},
                              {"isolate_x_ms", r.timings.isolate_x_ms},
                              {"isolate_y_ms", r.timings.isolate_y_ms},
                              {"match_ms", r.timings.match_ms},
                              {"cluster_ms", r.timings.cluster_ms},
                              {"total_ms", r.timings.total_ms}};
    }
    return out.dump(2);
}

SolveReport report_from_json(const std::string& json_text) {
    json j = json::parse(json_text);
    SolveReport r;
    r.f_text = j.at("f").get<std::string>();
    r.g_text = j.at("g").get<std::string>();
    r.t_raw = poly_p(j.at("t_raw"));
    r.t_sf = poly_p(j.at("t_sf"));
    r.T_raw = poly_p(j.at("T_raw"));
    r.T_sf = poly_p(j.at("T_sf"));
    r.params = params_p(j.at("params"));
    r.sx = roots_p(j.at("sx"));
    r.sy = roots_p(j.at("sy"));
    for (const auto& s : j.at("solutions")) {
        SolutionReport sr;
        sr.x_interval = interval_p(s.at("x_interval"));
        sr.y_interval = interval_p(s.at("y_interval"));
        sr.x_decimal = s.at("x_decimal").get<std::string>();
        sr.y_decimal = s.at("y_decimal").get<std::string>();
        sr.f_certified_zero = s.at("f_certified_zero").get<bool>();
        sr.g_certified_zero = s.at("g_certified_zero").get<bool>();
        sr.multiplicity_hint = {s.at("multiplicity_hint")[0].get<int>(),
                                s.at("multiplicity_hint")[1].get<int>()};
        sr.cluster_flag = s.at("cluster_flag").get<bool>();
        sr.i = s.at("i").get<int>();
        sr.j = s.at("j").get<int>();
        r.solutions.push_back(std::move(sr));
    }
    if (j.contains("timings")) {
        const auto& t = j.at("timings");
        r.timings = {t.at("project_x_ms").get<double>(), t.at("project_y_ms").get<double>(),
                     t.at("squarefree_ms").get<double>(), t.at("bound_ms").get<double>(),
                     t.at("isolate_x_ms").get<double>(),  t.at("isolate_y_ms").get<double>(),
                     t.at("match_ms").get<double>(),      t.at("cluster_ms").get<double>(),
                     t.at("total_ms").get<double>()};
    }
    r.workers = j.value("workers", 1);
    r.digits = j.at("digits").get<int>();
    return r;
}

std::string report_to_text(const SolveReport& r) {
    std::ostringstream os;
    os << "system:\n  f = " << r.f_text << "\n  g = " << r.g_text << "\n";
    os << "projections:\n";
    os << "  t(x) raw = " << r.t_raw.str() << "\n";
    os << "  t(x)     = " << r.t_sf.str() << "\n";
    os << "  T(y) raw = " << r.T_raw.str() << "\n";
    os << "  T(y)     = " << r.T_sf.str() << "\n";
    os << "bound (" << to_string(r.params.mode) << (r.params.certified ? ", certified" : ", NOT certified")
       << "):\n";
    os << "  N = " << to_string(r.params.N) << ", M = " << to_string(r.params.M)
       << ", s = " << r.params.s << ", c = " << to_string(r.params.c) << "\n";
    os << "  epsilon ~ 2^" << r.params.epsilon_log2 << "\n";
    os << "S_x (" << r.sx.size() << " real root" << (r.sx.size() == 1 ? "" : "s") << "):";
    for (const auto& root : r.sx) os << " " << root.decimal;
    os << "\nS_y (" << r.sy.size() << " real root" << (r.sy.size() == 1 ? "" : "s") << "):";
    for (const auto& root : r.sy) os << " " << root.decimal;
    os << "\nsolutions (" << r.solutions.size() << "):\n";
    for (const auto& s : r.solutions) {
        os << "  (x, y) = (" << s.x_decimal << ", " << s.y_decimal << ")  multiplicity: "
           << (s.cluster_flag ? "multiple (epsilon cluster)" : "one") << ", hint ("
           << s.multiplicity_hint.first << ", " << s.multiplicity_hint.second << ")\n";
    }
    os << "workers: " << r.workers << ", total time: " << r.timings.total_ms << " ms\n";
    return os.str();
}

}  // namespace bisolve
