#include "piv/text.hpp"

#include <cctype>
#include <stdexcept>

namespace piv {

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : s_(text) {}

    NCPoly parse() {
        NCPoly p = poly();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("parse error at position " + std::to_string(pos_) + ": " + what);
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    NCPoly poly() {
        NCPoly acc;
        bool negative = false;
        if (eat('-')) negative = true;
        else eat('+');
        acc += signed_term(negative);
        while (true) {
            if (eat('+')) acc += signed_term(false);
            else if (eat('-')) acc += signed_term(true);
            else break;
        }
        return acc;
    }

    NCPoly signed_term(bool negative) {
        NCPoly t = term();
        return negative ? -t : t;
    }

    NCPoly term() {
        NCPoly acc = NCPoly::unit();
        bool saw_factor = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            acc = scalar_coeff() * acc;
            saw_factor = true;
            if (!eat('*')) return acc;  // bare constant
        }
        while (true) {
            acc = acc * factor();
            saw_factor = true;
            if (!eat('*')) break;
        }
        if (!saw_factor) fail("expected a term");
        return acc;
    }

    Scalar scalar_coeff() {
        long num = integer();
        if (eat('/')) {
            long den = integer();
            if (den == 0) fail("zero denominator");
            return scalar(num, den);
        }
        return scalar(num);
    }

    long integer() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected an integer");
        return std::stol(s_.substr(start, pos_ - start));
    }

    NCPoly factor() {
        const char c = peek();
        if (c == 'x') return variable();
        if (c == '[') return comm();
        fail("expected a variable or a commutator");
    }

    NCPoly variable() {
        if (!eat('x')) fail("expected 'x'");
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected a variable index after 'x'");
        const long idx = std::stol(s_.substr(start, pos_ - start));
        if (idx < 1) fail("variable index must be positive");
        return NCPoly::var(static_cast<int>(idx));
    }

    NCPoly comm() {
        if (!eat('[')) fail("expected '['");
        std::vector<NCPoly> args;
        args.push_back(poly());
        while (eat(',')) args.push_back(poly());
        if (!eat(']')) fail("expected ']' or ','");
        if (args.size() < 2) fail("commutator needs at least two arguments");
        return commutator(args);
    }

    const std::string& s_;
    size_t pos_ = 0;
};

std::string word_str(const Word& w) {
    if (w.empty()) return "1";
    std::string s;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) s += "*";
        s += "x" + std::to_string(w[i]);
    }
    return s;
}

}  // namespace

NCPoly parse_poly(const std::string& text) {
    return Parser(text).parse();
}

std::string format_poly(const NCPoly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : f.terms()) {
        const bool neg = sgn(c) < 0;
        const Scalar mag = neg ? Scalar(-c) : c;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        if (mag == 1 && !w.empty()) out += word_str(w);
        else if (w.empty()) out += scalar_str(mag);
        else out += scalar_str(mag) + "*" + word_str(w);
    }
    return out;
}

NCPoly primitive_integer_scale(const NCPoly& f) {
    if (f.is_zero()) return f;
    Integer lcm_den = 1, gcd_num = 0;
    for (const auto& [w, c] : f.terms())
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den().get_mpz_t());
    for (const auto& [w, c] : f.terms()) {
        Integer scaled = c.get_num() * (lcm_den / c.get_den());
        mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), scaled.get_mpz_t());
    }
    Scalar factor(lcm_den, gcd_num);
    factor.canonicalize();
    return factor * f;
}

}  // namespace piv
