#include "bisolve/parser.hpp"

#include <cctype>

#include "bisolve/errors.hpp"

namespace bisolve {

namespace {

class Parser {
  public:
    explicit Parser(const std::string& text) : text_(text) {}

    BiPoly parse_full() {
        BiPoly p = parse_poly();
        skip_ws();
        if (pos_ != text_.size())
            throw parse_error(pos_, "unexpected '" + std::string(1, text_[pos_]) + "'");
        check(p);
        return p;
    }

    ParsedSystem parse_system_full() {
        BiPoly f = parse_poly();
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != ';')
            throw parse_error(pos_, "expected ';' between the two polynomials");
        ++pos_;
        BiPoly g = parse_poly();
        skip_ws();
        if (pos_ != text_.size())
            throw parse_error(pos_, "unexpected '" + std::string(1, text_[pos_]) + "'");
        check(f);
        check(g);
        return {f, g};
    }

  private:
    static void check(const BiPoly& p) {
        if (p.is_zero()) throw zero_polynomial_error();
        if (p.deg_x() == 0 && p.deg_y() == 0)
            throw solver_error("polynomial must mention x or y");
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    BiPoly parse_poly() {
        bool neg = eat('-');
        BiPoly acc = parse_term();
        if (neg) acc = -acc;
        while (true) {
            if (eat('+')) {
                acc = acc + parse_term();
            } else if (eat('-')) {
                acc = acc - parse_term();
            } else {
                return acc;
            }
        }
    }

    BiPoly parse_term() {
        BiPoly acc = parse_factor();
        while (eat('*')) acc = acc * parse_factor();
        return acc;
    }

    BiPoly parse_factor() {
        BiPoly base = parse_atom();
        if (eat('^')) {
            unsigned long e = parse_uint("exponent");
            BiPoly out;
            out.add_term(0, 0, Rational(1));
            BiPoly b = base;
            while (e) {
                if (e & 1) out = out * b;
                b = b * b;
                e >>= 1;
            }
            return out;
        }
        return base;
    }

    BiPoly parse_atom() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            BiPoly p = parse_poly();
            if (!eat(')')) throw parse_error(pos_, "expected ')'");
            return p;
        }
        if (c == 'x' || c == 'y') {
            ++pos_;
            BiPoly p;
            p.add_term(c == 'x' ? 1 : 0, c == 'x' ? 0 : 1, Rational(1));
            return p;
        }
        if (std::isalpha(static_cast<unsigned char>(c)))
            throw parse_error(pos_, std::string("unknown variable '") + c + "' (only x, y)");
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Int num = parse_int("number");
            Int den(1);
            if (eat('/')) {
                std::size_t den_pos = pos_;
                den = parse_int("denominator");
                if (den == 0) throw parse_error(den_pos, "zero denominator");
            }
            BiPoly p;
            p.add_term(0, 0, make_rational(num, den));
            return p;
        }
        throw parse_error(pos_, "expected a number, variable, or '('");
    }

    Int parse_int(const char* what) {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) throw parse_error(start, std::string("expected ") + what);
        return int_from_string(text_.substr(start, pos_ - start));
    }

    unsigned long parse_uint(const char* what) {
        Int v = parse_int(what);
        if (!v.fits_ulong_p()) throw parse_error(pos_, std::string(what) + " too large");
        return v.get_ui();
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

}  // namespace

BiPoly parse_poly(const std::string& text) { return Parser(text).parse_full(); }

ParsedSystem parse_system(const std::string& text) { return Parser(text).parse_system_full(); }

}  // namespace bisolve
