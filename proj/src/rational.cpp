#include "aspectra/rational.hpp"

#include <cctype>

#include "aspectra/errors.hpp"

namespace aspectra {

Rational rational_from_string(const std::string& text) {
    if (text.empty()) throw ParseError("empty rational literal");
    std::string s = text;
    // fraction form a/b
    if (s.find('/') != std::string::npos) {
        mpq_class q;
        if (q.set_str(s, 10) != 0) throw ParseError("bad rational literal: " + text);
        if (q.get_den() == 0) throw ParseError("zero denominator: " + text);
        q.canonicalize();
        return q;
    }
    // decimal form [-]digits[.digits]
    std::size_t pos = 0;
    bool neg = false;
    if (s[pos] == '+' || s[pos] == '-') {
        neg = s[pos] == '-';
        ++pos;
    }
    std::string digits;
    long frac_digits = -1;
    for (; pos < s.size(); ++pos) {
        char c = s[pos];
        if (c == '.') {
            if (frac_digits >= 0) throw ParseError("bad rational literal: " + text);
            frac_digits = 0;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            digits.push_back(c);
            if (frac_digits >= 0) ++frac_digits;
        } else {
            throw ParseError("bad rational literal: " + text);
        }
    }
    if (digits.empty()) throw ParseError("bad rational literal: " + text);
    mpz_class num(digits, 10);
    mpz_class den(1);
    for (long i = 0; i < frac_digits; ++i) den *= 10;
    Rational q(num, den);
    q.canonicalize();
    if (neg) q = -q;
    return q;
}

std::string rational_to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace aspectra
