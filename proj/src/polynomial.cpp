#include "aspectra/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "aspectra/errors.hpp"

namespace aspectra {

RationalPolynomial::RationalPolynomial(const Rational& constant) {
    if (constant != 0) coeffs_.push_back(constant);
}

RationalPolynomial::RationalPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
}

RationalPolynomial RationalPolynomial::x() { return monomial(1, Rational(1)); }

RationalPolynomial RationalPolynomial::monomial(int degree, const Rational& coeff) {
    RationalPolynomial p;
    if (coeff == 0) return p;
    p.coeffs_.assign(static_cast<std::size_t>(degree) + 1, Rational(0));
    p.coeffs_.back() = coeff;
    return p;
}

void RationalPolynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

bool RationalPolynomial::is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

const Rational& RationalPolynomial::leading() const {
    static const Rational zero(0);
    return coeffs_.empty() ? zero : coeffs_.back();
}

Rational RationalPolynomial::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rational(0);
    return coeffs_[static_cast<std::size_t>(i)];
}

RationalPolynomial RationalPolynomial::operator-() const {
    RationalPolynomial r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    normalize();
    return *this;
}

RationalPolynomial& RationalPolynomial::operator-=(const RationalPolynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    normalize();
    return *this;
}

RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (b.coeffs_[j] == 0) continue;
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return RationalPolynomial(std::move(out));
}

RationalPolynomial& RationalPolynomial::operator*=(const RationalPolynomial& rhs) {
    *this = *this * rhs;
    return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const Rational& scalar) {
    if (scalar == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_) c *= scalar;
    return *this;
}

RationalPolynomial RationalPolynomial::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> out(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
    return RationalPolynomial(std::move(out));
}

std::pair<RationalPolynomial, RationalPolynomial> RationalPolynomial::divrem(
    const RationalPolynomial& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
    RationalPolynomial rem(*this);
    if (rem.degree() < divisor.degree()) return {RationalPolynomial(), rem};
    std::vector<Rational> quot(static_cast<std::size_t>(rem.degree() - divisor.degree()) + 1, Rational(0));
    const Rational& lead = divisor.leading();
    while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
        int shift = rem.degree() - divisor.degree();
        Rational factor = rem.leading() / lead;
        quot[static_cast<std::size_t>(shift)] = factor;
        // rem -= factor * x^shift * divisor
        for (std::size_t i = 0; i < divisor.coeffs_.size(); ++i)
            rem.coeffs_[static_cast<std::size_t>(shift) + i] -= factor * divisor.coeffs_[i];
        rem.normalize();
    }
    return {RationalPolynomial(std::move(quot)), rem};
}

Rational RationalPolynomial::eval(const Rational& at) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
    return acc;
}

double RationalPolynomial::eval_double(double at) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + it->get_d();
    return acc;
}

int RationalPolynomial::sign_at(const Rational& at) const { return sgn(eval(at)); }

RationalPolynomial RationalPolynomial::primitive_scaled() const {
    if (is_zero()) return {};
    mpz_class den_lcm(1);
    for (const auto& c : coeffs_) {
        mpz_class d = c.get_den();
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
        den_lcm = den_lcm / g * d;
    }
    mpz_class num_gcd(0);
    std::vector<mpz_class> ints;
    ints.reserve(coeffs_.size());
    for (const auto& c : coeffs_) {
        mpz_class v = c.get_num() * (den_lcm / c.get_den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), v.get_mpz_t());
        ints.push_back(std::move(v));
    }
    std::vector<Rational> out;
    out.reserve(ints.size());
    for (auto& v : ints) out.emplace_back(v / num_gcd);
    return RationalPolynomial(std::move(out));
}

std::string RationalPolynomial::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int d = degree(); d >= 0; --d) {
        const Rational& c = coeffs_[static_cast<std::size_t>(d)];
        if (c == 0) continue;
        Rational a = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool unit = (a == 1) && d > 0;
        if (!unit) os << rational_to_string(a);
        if (d > 0) {
            if (!unit) os << "*";
            os << var;
            if (d > 1) os << "^" << d;
        }
    }
    return os.str();
}

RationalPolynomial pow(const RationalPolynomial& base, unsigned exponent) {
    RationalPolynomial acc(Rational(1));
    RationalPolynomial b = base;
    unsigned e = exponent;
    while (e > 0) {
        if (e & 1u) acc *= b;
        b *= b;
        e >>= 1u;
    }
    return acc;
}

RationalPolynomial poly_gcd(RationalPolynomial a, RationalPolynomial b) {
    while (!b.is_zero()) {
        auto [q, r] = a.divrem(b);
        (void)q;
        a = std::move(b);
        b = r.primitive_scaled();  // keep coefficients small
    }
    if (a.is_zero()) return a;
    Rational inv_lead = Rational(1) / a.leading();
    return a * inv_lead;
}

std::vector<RationalPolynomial> sturm_sequence(const RationalPolynomial& p) {
    std::vector<RationalPolynomial> seq;
    if (p.is_zero()) return seq;
    seq.push_back(p.primitive_scaled());
    RationalPolynomial d = p.derivative();
    if (d.is_zero()) return seq;
    seq.push_back(d.primitive_scaled());
    while (true) {
        const RationalPolynomial& a = seq[seq.size() - 2];
        const RationalPolynomial& b = seq[seq.size() - 1];
        auto [q, r] = a.divrem(b);
        (void)q;
        if (r.is_zero()) break;
        seq.push_back((-r).primitive_scaled());
        if (seq.back().degree() == 0) break;
    }
    return seq;
}

namespace {

int sign_variations(const std::vector<RationalPolynomial>& seq, const Rational& at) {
    int variations = 0;
    int prev = 0;
    for (const auto& p : seq) {
        int s = p.sign_at(at);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++variations;
        prev = s;
    }
    return variations;
}

// A point strictly inside (lo, hi) where p does not vanish; Sturm variation
// counts are only queried at non-roots of the chain's head.
Rational interior_nonroot(const RationalPolynomial& p, const Rational& lo, const Rational& hi) {
    const Rational width = hi - lo;
    for (long den = 2; den < 1 << 20; den *= 2) {
        for (long num = 1; num < den; num += 2) {
            Rational cand = lo + width * Rational(num, den);
            if (p.sign_at(cand) != 0) return cand;
        }
    }
    throw std::domain_error("could not find a non-root point in interval");
}

}  // namespace

int count_roots_in(const std::vector<RationalPolynomial>& sturm, const Rational& lo, const Rational& hi) {
    if (sturm.empty()) return 0;
    return sign_variations(sturm, lo) - sign_variations(sturm, hi);
}

Rational root_bound(const RationalPolynomial& p) {
    if (p.degree() < 1) return Rational(1);
    Rational maxratio(0);
    const Rational lead = abs(p.leading());
    for (int i = 0; i < p.degree(); ++i) {
        Rational r = abs(p.coeff(i)) / lead;
        if (r > maxratio) maxratio = r;
    }
    return maxratio + 1;
}

RootInterval isolate_largest_root(const RationalPolynomial& p) {
    if (p.degree() < 1) throw std::domain_error("constant polynomial has no roots");
    auto sturm = sturm_sequence(p);
    Rational hi = root_bound(p);
    Rational lo = -hi;
    int total = count_roots_in(sturm, lo, hi);
    if (total < 1) throw std::domain_error("polynomial has no real roots");
    // Shrink from below until exactly one (the largest) root remains.
    while (count_roots_in(sturm, lo, hi) > 1) {
        Rational mid = interior_nonroot(p, lo, hi);
        if (count_roots_in(sturm, mid, hi) >= 1)
            lo = mid;
        else
            hi = mid;
    }
    return {lo, hi};
}

int compare_largest_roots(const RationalPolynomial& p, const RationalPolynomial& q) {
    auto sturm_p = sturm_sequence(p);
    auto sturm_q = sturm_sequence(q);
    RootInterval ip = isolate_largest_root(p);
    RootInterval iq = isolate_largest_root(q);
    RationalPolynomial common = poly_gcd(p, q);
    std::vector<RationalPolynomial> sturm_c;
    if (common.degree() >= 1) sturm_c = sturm_sequence(common);
    while (true) {
        if (ip.lo >= iq.hi) return 1;   // p's root > q's root
        if (iq.lo >= ip.hi) return -1;  // q's root > p's root
        // Overlap: each interval holds exactly its largest root, so a root of
        // gcd(p,q) inside the overlap is the largest root of both.
        if (common.degree() >= 1) {
            Rational olo = std::max(ip.lo, iq.lo);
            Rational ohi = std::min(ip.hi, iq.hi);
            if (count_roots_in(sturm_c, olo, ohi) >= 1) return 0;
        }
        // Bisect both intervals.
        Rational pm = interior_nonroot(p, ip.lo, ip.hi);
        if (count_roots_in(sturm_p, pm, ip.hi) >= 1)
            ip.lo = pm;
        else
            ip.hi = pm;
        Rational qm = interior_nonroot(q, iq.lo, iq.hi);
        if (count_roots_in(sturm_q, qm, iq.hi) >= 1)
            iq.lo = qm;
        else
            iq.hi = qm;
    }
}

double largest_root_approx(const RationalPolynomial& p, double prec) {
    RootInterval iv = isolate_largest_root(p);
    auto sturm = sturm_sequence(p);
    while (to_double(iv.hi - iv.lo) > prec) {
        Rational mid = interior_nonroot(p, iv.lo, iv.hi);
        if (count_roots_in(sturm, mid, iv.hi) >= 1)
            iv.lo = mid;
        else
            iv.hi = mid;
    }
    return to_double((iv.lo + iv.hi) / 2);
}

}  // namespace aspectra
