#ifndef ASPECTRA_POLYNOMIAL_HPP
#define ASPECTRA_POLYNOMIAL_HPP

#include <string>
#include <utility>
#include <vector>

#include "aspectra/rational.hpp"

namespace aspectra {

// Dense univariate polynomial over Q. Coefficient index = degree.
// Invariant: leading coefficient nonzero unless the polynomial is zero
// (empty coefficient vector). All arithmetic is exact.
class RationalPolynomial {
  public:
    RationalPolynomial() = default;  // zero polynomial
    explicit RationalPolynomial(const Rational& constant);
    explicit RationalPolynomial(std::vector<Rational> coeffs);  // normalizes

    static RationalPolynomial x();
    static RationalPolynomial monomial(int degree, const Rational& coeff);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const;
    const Rational& leading() const;
    Rational coeff(int i) const;  // 0 outside stored range
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    RationalPolynomial operator-() const;
    RationalPolynomial& operator+=(const RationalPolynomial& rhs);
    RationalPolynomial& operator-=(const RationalPolynomial& rhs);
    RationalPolynomial& operator*=(const RationalPolynomial& rhs);
    RationalPolynomial& operator*=(const Rational& scalar);

    friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) { return a += b; }
    friend RationalPolynomial operator-(RationalPolynomial a, const RationalPolynomial& b) { return a -= b; }
    friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b);
    friend RationalPolynomial operator*(RationalPolynomial a, const Rational& s) { return a *= s; }
    friend RationalPolynomial operator*(const Rational& s, RationalPolynomial a) { return a *= s; }

    bool operator==(const RationalPolynomial& rhs) const { return coeffs_ == rhs.coeffs_; }
    bool operator!=(const RationalPolynomial& rhs) const { return !(*this == rhs); }

    RationalPolynomial derivative() const;
    // Euclidean division; throws on zero divisor.
    std::pair<RationalPolynomial, RationalPolynomial> divrem(const RationalPolynomial& divisor) const;

    Rational eval(const Rational& at) const;
    double eval_double(double at) const;
    int sign_at(const Rational& at) const;

    // Multiplies by the positive rational that makes all coefficients
    // coprime integers (keeps Sturm remainders small). Sign preserved.
    RationalPolynomial primitive_scaled() const;

    std::string to_string(const std::string& var = "x") const;

  private:
    void normalize();
    std::vector<Rational> coeffs_;
};

RationalPolynomial pow(const RationalPolynomial& base, unsigned exponent);
// Monic gcd; gcd(0,0) = 0.
RationalPolynomial poly_gcd(RationalPolynomial a, RationalPolynomial b);

// --- real-root tools (all roots of our inputs are real: characteristic
// --- polynomials of symmetric matrices) ---

// Sturm chain p, p', -rem(...), ... with each member primitive-scaled.
std::vector<RationalPolynomial> sturm_sequence(const RationalPolynomial& p);
// Number of distinct real roots in the half-open interval (lo, hi].
int count_roots_in(const std::vector<RationalPolynomial>& sturm, const Rational& lo, const Rational& hi);

// Strict upper bound on the absolute value of every root (Cauchy bound).
Rational root_bound(const RationalPolynomial& p);

// Half-open interval (lo, hi] containing exactly the largest real root.
struct RootInterval {
    Rational lo, hi;
};
// Requires p nonconstant with at least one real root.
RootInterval isolate_largest_root(const RationalPolynomial& p);

// Exact sign of (largest real root of p) - (largest real root of q):
// -1, 0, +1. Both polynomials must have a real root.
int compare_largest_roots(const RationalPolynomial& p, const RationalPolynomial& q);

// Largest real root bracketed to width <= prec, returned as a double.
double largest_root_approx(const RationalPolynomial& p, double prec = 1e-12);

}  // namespace aspectra

#endif
