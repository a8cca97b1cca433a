#ifndef QOP_RATIONAL_HPP
#define QOP_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qop {

// Exact arbitrary-precision scalars. mpq_class keeps the canonical form we
// rely on everywhere: gcd(|num|, den) = 1 and den >= 1, with 0 stored as 0/1.
using Integer = mpz_class;
using Rational = mpq_class;

inline int sign(const Rational& q) { return sgn(q); }
inline int sign(const Integer& z) { return sgn(z); }

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// Parses "num/den" (or a bare integer) into a canonical rational.
Rational parse_rational(const std::string& text);

/// Formats as "num/den", always including the denominator ("3" -> "3/1").
std::string format_rational(const Rational& q);

Integer factorial(unsigned long n);

/// m!! with the conventions (-1)!! = 0!! = 1.
Integer double_factorial(long m);

/// binom(n, k) over the integers; 0 whenever k < 0 or k > n.
Integer binomial(long n, long k);

Rational rational_pow(const Rational& base, unsigned long exp);

struct ComplexRational {
    Rational re;
    Rational im;

    ComplexRational() = default;
    ComplexRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }

    friend ComplexRational operator+(const ComplexRational& a, const ComplexRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend ComplexRational operator-(const ComplexRational& a, const ComplexRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend ComplexRational operator*(const ComplexRational& a, const ComplexRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend bool operator==(const ComplexRational& a, const ComplexRational& b) {
        return a.re == b.re && a.im == b.im;
    }
};

}  // namespace qop

#endif
