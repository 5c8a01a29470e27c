#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "qtkern/exactalg/ratfunc.hpp"

namespace qtkern {

namespace detail {

inline std::string exponent_text(Symbol v, int e) {
    Scalar r(e, v.scale());
    r.canonicalize();
    if (r == 1) return v.name();
    if (r.get_den() == 1 && r > 0) return v.name() + "^" + r.get_str();
    return v.name() + "^(" + r.get_str() + ")";
}

inline std::string monomial_text(const Monomial& m) {
    std::string s;
    for (const auto& [v, e] : m.entries()) {
        if (!s.empty()) s += "*";
        s += exponent_text(v, e);
    }
    return s;
}

inline std::vector<std::pair<Monomial, Scalar>> print_ordered(const MPoly& p) {
    std::vector<std::pair<Monomial, Scalar>> t(p.terms().begin(), p.terms().end());
    std::sort(t.begin(), t.end(), [](const auto& a, const auto& b) { return print_before(a.first, b.first); });
    return t;
}

}  // namespace detail

/// Canonical text of a polynomial: terms by ascending degree, ties by
/// descending lex; coefficient 1 omitted, rational coefficients as a/b*.
inline std::string to_string(const MPoly& p) {
    if (p.zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : detail::print_ordered(p)) {
        Scalar a = abs(c);
        if (sgn(c) < 0)
            out += "-";
        else if (!first)
            out += "+";
        first = false;
        if (m.is_one()) {
            out += a.get_str();
            continue;
        }
        if (a != 1) out += a.get_str() + "*";
        out += detail::monomial_text(m);
    }
    return out;
}

inline std::string to_string(const RatFunc& f) {
    const MPoly& n = f.num();
    const MPoly& d = f.den();
    if (d.is_constant() && d.constant_term() == 1) return to_string(n);
    std::string out;
    MPoly shown = n;
    if (sgn(n.coefficient(trailing_monomial(n))) < 0) {
        out += "-";
        shown = -n;
    }
    std::string ns = to_string(shown);
    out += shown.size() > 1 ? "(" + ns + ")" : ns;
    out += "/";
    std::string ds = to_string(d);
    bool bare = d.size() == 1 && (d.is_constant() || (d.leading_coefficient() == 1 &&
                                                       d.leading_monomial().entries().size() == 1));
    out += bare ? ds : "(" + ds + ")";
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const RatFunc& f) { return os << to_string(f); }

namespace detail {

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    RatFunc parse() {
        RatFunc r = expr();
        skip();
        if (pos_ != s_.size()) fail("trailing input");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw MalformedInput("parse error at " + std::to_string(pos_) + ": " + what + " in '" +
                             std::string(s_) + "'");
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    char peek() {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    RatFunc expr() {
        RatFunc r;
        if (eat('-'))
            r = -term();
        else {
            eat('+');
            r = term();
        }
        while (true) {
            if (eat('+'))
                r += term();
            else if (eat('-'))
                r -= term();
            else
                return r;
        }
    }

    RatFunc term() {
        RatFunc r = unary();
        while (true) {
            if (eat('*'))
                r *= unary();
            else if (eat('/')) {
                RatFunc d = unary();
                if (d.zero()) fail("division by zero");
                r /= d;
            } else
                return r;
        }
    }

    RatFunc unary() {
        if (eat('-')) return -unary();
        return power();
    }

    Integer integer() {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer");
        return Integer(std::string(s_.substr(start, pos_ - start)));
    }

    Scalar exponent() {
        if (eat('(')) {
            bool neg = eat('-');
            Scalar e(integer());
            if (eat('/')) e /= Scalar(integer());
            if (!eat(')')) fail("expected ')'");
            e.canonicalize();
            return neg ? Scalar(-e) : e;
        }
        bool neg = eat('-');
        Scalar e(integer());
        return neg ? Scalar(-e) : e;
    }

    RatFunc power() {
        RatFunc base = atom();
        if (!eat('^')) return base;
        Scalar e = exponent();
        if (e.get_den() == 1) return base.pow(e.get_num().get_si());
        // fractional powers only of bare monomials
        const MPoly& n = base.num();
        if (!base.is_polynomial() || base.den().constant_term() != 1 || n.size() != 1 ||
            n.leading_coefficient() != 1)
            fail("fractional power of non-monomial");
        std::vector<Monomial::Entry> out;
        for (const auto& [v, k] : n.leading_monomial().entries()) {
            Scalar x = Scalar(k) * e;
            x.canonicalize();
            if (x.get_den() != 1) fail("fractional exponent not representable for " + v.name());
            out.emplace_back(v, static_cast<int>(x.get_num().get_si()));
        }
        return RatFunc::monomial(Monomial(std::move(out)));
    }

    RatFunc atom() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            RatFunc r = expr();
            if (!eat(')')) fail("expected ')'");
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return RatFunc(Scalar(integer()));
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            Symbol v(s_.substr(start, pos_ - start));
            return RatFunc::monomial(Monomial(v, v.scale()));
        }
        fail("unexpected character");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parse the textual form produced by to_string (and ordinary arithmetic
/// expressions in + - * / ^ with parentheses).
inline RatFunc parse_ratfunc(std::string_view s) { return detail::Parser(s).parse(); }

}  // namespace qtkern
