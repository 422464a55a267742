#pragma once

#include <gmpxx.h>

#include <string>

#include "bisolve/errors.hpp"

namespace bisolve {

// Exact arbitrary-precision arithmetic. mpq_class keeps values canonical
// (positive denominator, gcd(num, den) = 1) as long as every value is built
// through its arithmetic or through make_rational below.
using Int = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Int& num, const Int& den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(long num, long den = 1) {
    return make_rational(Int(num), Int(den));
}

inline int sign(const Rational& r) { return sgn(r); }

inline Rational abs(const Rational& r) { return ::abs(r); }

inline bool is_canonical(const Rational& r) {
    if (sgn(r.get_den()) <= 0) return false;
    Int g;
    mpz_gcd(g.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return g == 1 || r.get_num() == 0;
}

// r^k for k >= 0.
inline Rational pow_int(const Rational& r, unsigned long k) {
    Rational out;
    mpz_pow_ui(out.get_num().get_mpz_t(), r.get_num().get_mpz_t(), k);
    mpz_pow_ui(out.get_den().get_mpz_t(), r.get_den().get_mpz_t(), k);
    out.canonicalize();  // inputs canonical => already coprime, cheap
    return out;
}

// 2^e as an exact rational (e may be negative).
inline Rational pow2(long e) {
    Int p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e >= 0 ? e : -e));
    return e >= 0 ? Rational(p) : make_rational(Int(1), p);
}

// floor(log2(r)) for r > 0: 2^result <= r < 2^(result+1).
inline long floor_log2(const Rational& r) {
    if (sgn(r) <= 0) throw non_positive_error();
    const Int& n = r.get_num();
    const Int& d = r.get_den();
    long bn = static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 2));
    long bd = static_cast<long>(mpz_sizeinbase(d.get_mpz_t(), 2));
    long e = bn - bd;  // r in [2^(e-1), 2^(e+1))
    // Decide between e-1 and e exactly: r >= 2^e ?
    return r >= pow2(e) ? e : e - 1;
}

// Base-10 parse of "num" or "num/den". mpz_class's string constructor
// defaults to base 0, where a leading zero means octal — avoid it.
inline Int int_from_string(const std::string& s) {
    Int v;
    if (mpz_set_str(v.get_mpz_t(), s.c_str(), 10) != 0)
        throw solver_error("bad integer literal: " + s);
    return v;
}

inline Rational rational_from_string(const std::string& s) {
    std::size_t slash = s.find('/');
    if (slash == std::string::npos) return Rational(int_from_string(s));
    return make_rational(int_from_string(s.substr(0, slash)),
                         int_from_string(s.substr(slash + 1)));
}

inline std::string to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace bisolve
