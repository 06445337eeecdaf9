#include "rospave/rational.hpp"

#include "rospave/errors.hpp"

namespace rospave {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) {
        return false;
    }
    return s.find_first_not_of("0123456789") == std::string_view::npos;
}

} // namespace

Rational parse_rational(std::string_view text) {
    const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
    while (!text.empty() && is_space(text.front())) {
        text.remove_prefix(1);
    }
    while (!text.empty() && is_space(text.back())) {
        text.remove_suffix(1);
    }
    if (text.empty()) {
        throw ParseError("empty rational literal");
    }

    bool negative = false;
    if (text.front() == '+' || text.front() == '-') {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    if (text.empty()) {
        throw ParseError("sign without digits in rational literal");
    }

    const std::size_t slash = text.find('/');
    const std::size_t dot = text.find('.');
    Rational out;
    if (slash != std::string_view::npos) {
        if (dot != std::string_view::npos) {
            throw ParseError("rational literal mixes '/' and '.': " + std::string(text));
        }
        const std::string_view num = text.substr(0, slash);
        const std::string_view den = text.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) {
            throw ParseError("malformed fraction: " + std::string(text));
        }
        Integer p{std::string(num), 10};
        Integer q{std::string(den), 10};
        if (q == 0) {
            throw ParseError("zero denominator: " + std::string(text));
        }
        out = Rational(p, q);
        out.canonicalize();
    } else if (dot != std::string_view::npos) {
        const std::string_view whole = text.substr(0, dot);
        const std::string_view frac = text.substr(dot + 1);
        if (whole.empty() && frac.empty()) {
            throw ParseError("bare '.' is not a rational literal");
        }
        if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac))) {
            throw ParseError("malformed decimal: " + std::string(text));
        }
        // Base 10 always: the GMP default of 0 would read a leading zero,
        // as in "0.125" concatenated to "0125", as an octal prefix.
        Integer p{std::string(whole) + std::string(frac), 10};
        Integer q;
        mpz_ui_pow_ui(q.get_mpz_t(), 10, frac.size());
        out = Rational(p, q);
        out.canonicalize();
    } else {
        if (!all_digits(text)) {
            throw ParseError("malformed integer: " + std::string(text));
        }
        out = Rational(Integer(std::string(text), 10));
    }
    if (negative) {
        out = -out;
    }
    return out;
}

std::string format_rational(const Rational& value) {
    if (value.get_den() == 1) {
        return value.get_num().get_str();
    }
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Integer rational_floor(const Rational& value) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), value.get_num().get_mpz_t(), value.get_den().get_mpz_t());
    return q;
}

} // namespace rospave
