#ifndef QOP_POLYNOMIAL_HPP
#define QOP_POLYNOMIAL_HPP

#include <initializer_list>
#include <utility>
#include <vector>

#include "qop/rational.hpp"

namespace qop {

/// Dense univariate polynomial over the rationals, coefficients in ascending
/// degree order. Normal form: no stored trailing zeros, so the zero
/// polynomial owns the empty coefficient vector and degree() == kZeroDegree.
class Polynomial {
  public:
    // stands in for "degree of the zero polynomial is minus infinity"
    static constexpr long kZeroDegree = -1;

    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }
    Polynomial(std::initializer_list<Rational> coeffs) : c_(coeffs) { normalize(); }

    static Polynomial zero() { return Polynomial{}; }
    static Polynomial constant(Rational v);
    /// c * x^k
    static Polynomial monomial(Rational c, std::size_t k);

    bool is_zero() const { return c_.empty(); }
    long degree() const { return c_.empty() ? kZeroDegree : static_cast<long>(c_.size()) - 1; }

    /// Coefficient of x^i; 0 beyond the stored degree.
    const Rational& coeff(std::size_t i) const;
    const std::vector<Rational>& coeffs() const { return c_; }
    const Rational& leading() const;

    bool is_constant() const { return c_.size() <= 1; }

    Rational operator()(const Rational& point) const;
    ComplexRational operator()(const ComplexRational& point) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);
    Polynomial& operator*=(const Rational& s);
    Polynomial& operator/=(const Rational& s);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
    friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
    friend Polynomial operator/(Polynomial a, const Rational& s) { return a /= s; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  private:
    void normalize();
    std::vector<Rational> c_;
};

Polynomial derivative(const Polynomial& p);

/// p(a*x + b), exact; degree is preserved when a != 0.
Polynomial compose_affine(const Polynomial& p, const Rational& a, const Rational& b);

Polynomial poly_pow(const Polynomial& base, unsigned long exp);

/// Positive content: gcd of the numerators over the lcm of the denominators.
/// content(0) = 0.
Rational content(const Polynomial& p);

/// p divided by its content (error on the zero polynomial). The result has
/// coprime integer coefficients and keeps the sign of the leading term.
Polynomial divide_by_content(const Polynomial& p);

/// Exact quotient a / b; throws std::domain_error when b does not divide a.
Polynomial divide_exact(const Polynomial& a, const Polynomial& b);

/// Quotient and remainder of Euclidean division by a nonzero divisor.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

/// gcd normalized to coprime integer coefficients with positive leading term;
/// gcd(0, 0) = 0.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

/// p / gcd(p, p'): same distinct roots, all simple.
Polynomial squarefree_part(const Polynomial& p);

/// Yun decomposition p = c * prod f_i^{m_i} with the f_i squarefree, pairwise
/// coprime, non-constant. Returns (f_i, m_i) pairs sorted by multiplicity.
std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& p);

}  // namespace qop

#endif
