#include "qop/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace qop {

namespace {
const Rational kZero(0);
}

void Polynomial::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Polynomial Polynomial::constant(Rational v) {
    Polynomial p;
    if (v != 0) p.c_.push_back(std::move(v));
    return p;
}

Polynomial Polynomial::monomial(Rational c, std::size_t k) {
    Polynomial p;
    if (c != 0) {
        p.c_.assign(k + 1, Rational(0));
        p.c_.back() = std::move(c);
    }
    return p;
}

const Rational& Polynomial::coeff(std::size_t i) const {
    return i < c_.size() ? c_[i] : kZero;
}

const Rational& Polynomial::leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
}

Rational Polynomial::operator()(const Rational& point) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * point + *it;
    return acc;
}

ComplexRational Polynomial::operator()(const ComplexRational& point) const {
    ComplexRational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * point + ComplexRational(*it, Rational(0));
    return acc;
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    if (c_.size() < rhs.c_.size()) c_.resize(rhs.c_.size(), Rational(0));
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] += rhs.c_[i];
    normalize();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    if (c_.size() < rhs.c_.size()) c_.resize(rhs.c_.size(), Rational(0));
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] -= rhs.c_[i];
    normalize();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial::zero();
    Polynomial r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    r.normalize();
    return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
    *this = *this * rhs;
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
}

Polynomial& Polynomial::operator/=(const Rational& s) {
    if (s == 0) throw std::domain_error("polynomial division by zero scalar");
    for (auto& c : c_) c /= s;
    return *this;
}

Polynomial derivative(const Polynomial& p) {
    const auto& c = p.coeffs();
    if (c.size() <= 1) return Polynomial::zero();
    std::vector<Rational> d(c.size() - 1);
    for (std::size_t i = 1; i < c.size(); ++i) d[i - 1] = c[i] * Rational(static_cast<long>(i));
    return Polynomial(std::move(d));
}

Polynomial compose_affine(const Polynomial& p, const Rational& a, const Rational& b) {
    // Horner in (a*x + b)
    Polynomial lin({b, a});
    Polynomial acc;
    const auto& c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * lin + Polynomial::constant(*it);
    return acc;
}

Polynomial poly_pow(const Polynomial& base, unsigned long exp) {
    Polynomial r = Polynomial::constant(Rational(1));
    Polynomial b = base;
    while (exp != 0) {
        if (exp & 1UL) r *= b;
        b *= b;
        exp >>= 1UL;
    }
    return r;
}

Rational content(const Polynomial& p) {
    if (p.is_zero()) return Rational(0);
    Integer num_gcd(0), den_lcm(1);
    for (const auto& c : p.coeffs()) {
        if (c == 0) continue;
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rational result(num_gcd, den_lcm);
    result.canonicalize();
    return result;
}

Polynomial divide_by_content(const Polynomial& p) {
    if (p.is_zero()) throw std::domain_error("content of zero polynomial does not divide");
    Polynomial q = p;
    q /= content(p);
    return q;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.degree() < b.degree()) return {Polynomial::zero(), a};
    std::vector<Rational> rem(a.coeffs());
    const long db = b.degree();
    const Rational& lead = b.leading();
    std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db) + 1, Rational(0));
    for (long i = a.degree(); i >= db; --i) {
        Rational& top = rem[static_cast<std::size_t>(i)];
        if (top == 0) continue;
        Rational f = top / lead;
        quot[static_cast<std::size_t>(i - db)] = f;
        for (long j = 0; j <= db; ++j)
            rem[static_cast<std::size_t>(i - db + j)] -= f * b.coeff(static_cast<std::size_t>(j));
    }
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial divide_exact(const Polynomial& a, const Polynomial& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::domain_error("polynomial division is not exact");
    return q;
}

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
    Polynomial u = a, v = b;
    while (!v.is_zero()) {
        auto [q, r] = divmod(u, v);
        u = std::move(v);
        v = std::move(r);
        // renormalizing each remainder keeps the rational coefficients small
        if (!v.is_zero()) v = divide_by_content(v);
    }
    if (u.is_zero()) return u;
    u = divide_by_content(u);
    if (sign(u.leading()) < 0) u *= Rational(-1);
    return u;
}

Polynomial squarefree_part(const Polynomial& p) {
    if (p.is_zero()) throw std::domain_error("squarefree part of zero polynomial");
    if (p.degree() == 0) return Polynomial::constant(Rational(1));
    Polynomial g = poly_gcd(p, derivative(p));
    Polynomial q = divide_exact(p, g);
    q = divide_by_content(q);
    if (sign(q.leading()) < 0) q *= Rational(-1);
    return q;
}

std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& p) {
    std::vector<std::pair<Polynomial, int>> factors;
    if (p.is_zero()) throw std::domain_error("squarefree decomposition of zero polynomial");
    if (p.degree() == 0) return factors;
    // Yun's algorithm over Q
    Polynomial dp = derivative(p);
    Polynomial u = poly_gcd(p, dp);
    Polynomial v = divide_exact(p, u);
    Polynomial w = divide_exact(dp, u);
    int mult = 1;
    while (v.degree() > 0) {
        Polynomial z = w - derivative(v);
        Polynomial h = poly_gcd(v, z);
        if (h.degree() > 0) factors.emplace_back(h, mult);
        v = divide_exact(v, h);
        w = divide_exact(z, h);
        ++mult;
    }
    return factors;
}

}  // namespace qop
