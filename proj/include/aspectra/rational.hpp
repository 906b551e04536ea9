#ifndef ASPECTRA_RATIONAL_HPP
#define ASPECTRA_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace aspectra {

// Exact rational scalar. GMP's canonical form (coprime, positive denominator)
// is maintained by all arithmetic.
using Rational = mpq_class;

// GMP convention: mpq values must stay canonical (coprime, positive
// denominator). Two-argument construction does not canonicalize, so build
// ratios with make_rational or rational_from_string unless the parts are
// already coprime literals.
inline Rational make_rational(long num, long den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Parses "3/4", "-2", "0.1" (decimal digits become an exact power-of-ten
// denominator, so "0.1" is 1/10, not the nearest double).
Rational rational_from_string(const std::string& text);

// "num" or "num/den", canonical form.
std::string rational_to_string(const Rational& q);

inline double to_double(const Rational& q) { return q.get_d(); }

inline int sign(const Rational& q) { return sgn(q); }

}  // namespace aspectra

#endif
