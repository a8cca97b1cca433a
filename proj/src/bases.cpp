#include "qop/bases.hpp"

#include <stdexcept>

namespace qop {

namespace {

Polynomial hermite_physicist_closed(std::size_t n) {
    // H_n(x) = n! sum_m (-1)^m / (m! (n-2m)!) (2x)^(n-2m)
    std::vector<Rational> coeffs(n + 1, Rational(0));
    const Integer nfact = factorial(n);
    for (std::size_t m = 0; 2 * m <= n; ++m) {
        const std::size_t d = n - 2 * m;
        Integer num = nfact;
        mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), d);  // * 2^d
        if (m % 2 != 0) num = -num;
        Rational c(num, factorial(m) * factorial(d));
        c.canonicalize();
        coeffs[d] = c;
    }
    return Polynomial(std::move(coeffs));
}

Polynomial laguerre_closed(std::size_t n) {
    // L_n(x) = sum_k binom(n,k) (-x)^k / k!
    std::vector<Rational> coeffs(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        Integer num = binomial(static_cast<long>(n), static_cast<long>(k));
        if (k % 2 != 0) num = -num;
        Rational c(num, factorial(k));
        c.canonicalize();
        coeffs[k] = c;
    }
    return Polynomial(std::move(coeffs));
}

Polynomial chebyshev_closed(std::size_t n) {
    // sum over k <= n/2 of binom(n,2k) (x^2-1)^k x^(n-2k); terms with 2k > n vanish
    Polynomial result;
    const Polynomial x2m1({Rational(-1), Rational(0), Rational(1)});
    Polynomial pw = Polynomial::constant(Rational(1));
    for (std::size_t k = 0; 2 * k <= n; ++k) {
        Rational b(binomial(static_cast<long>(n), static_cast<long>(2 * k)));
        result += b * (pw * Polynomial::monomial(Rational(1), n - 2 * k));
        pw *= x2m1;
    }
    return result;
}

Polynomial legendre_closed(std::size_t n) {
    // 2^-n sum_k binom(n,k)^2 (x-1)^(n-k) (x+1)^k
    const Polynomial xm1({Rational(-1), Rational(1)});
    const Polynomial xp1({Rational(1), Rational(1)});
    std::vector<Polynomial> minus_pow(n + 1), plus_pow(n + 1);
    minus_pow[0] = plus_pow[0] = Polynomial::constant(Rational(1));
    for (std::size_t i = 1; i <= n; ++i) {
        minus_pow[i] = minus_pow[i - 1] * xm1;
        plus_pow[i] = plus_pow[i - 1] * xp1;
    }
    Polynomial sum;
    for (std::size_t k = 0; k <= n; ++k) {
        const Integer b = binomial(static_cast<long>(n), static_cast<long>(k));
        sum += Rational(b * b) * (minus_pow[n - k] * plus_pow[k]);
    }
    Rational scale(1, Integer(1) << n);
    scale.canonicalize();
    return scale * sum;
}

}  // namespace

std::string family_name(Family f) {
    switch (f) {
        case Family::monomial: return "monomial";
        case Family::hermite_probabilist: return "hermite-prob";
        case Family::hermite_physicist: return "hermite-phys";
        case Family::hermite_physicist_scaled: return "hermite-phys-scaled";
        case Family::laguerre: return "laguerre";
        case Family::chebyshev: return "chebyshev";
        case Family::legendre: return "legendre";
        case Family::custom: return "custom";
    }
    return "unknown";
}

std::optional<Family> family_from_name(const std::string& name) {
    for (Family f : {Family::monomial, Family::hermite_probabilist, Family::hermite_physicist,
                     Family::hermite_physicist_scaled, Family::laguerre, Family::chebyshev,
                     Family::legendre, Family::custom})
        if (family_name(f) == name) return f;
    return std::nullopt;
}

std::size_t ThreeTermRecurrence::max_n() const {
    return std::min(c.size(), lambda.size() + 1);
}

BasisSpec BasisSpec::monomial() { return {}; }
BasisSpec BasisSpec::hermite_probabilist(Rational alpha) {
    BasisSpec s;
    s.family = Family::hermite_probabilist;
    s.alpha = std::move(alpha);
    return s;
}
BasisSpec BasisSpec::hermite_physicist() {
    BasisSpec s;
    s.family = Family::hermite_physicist;
    return s;
}
BasisSpec BasisSpec::hermite_physicist_scaled(Rational beta) {
    BasisSpec s;
    s.family = Family::hermite_physicist_scaled;
    s.beta = std::move(beta);
    return s;
}
BasisSpec BasisSpec::laguerre() {
    BasisSpec s;
    s.family = Family::laguerre;
    return s;
}
BasisSpec BasisSpec::chebyshev() {
    BasisSpec s;
    s.family = Family::chebyshev;
    return s;
}
BasisSpec BasisSpec::legendre() {
    BasisSpec s;
    s.family = Family::legendre;
    return s;
}
BasisSpec BasisSpec::custom(ThreeTermRecurrence rec) {
    BasisSpec s;
    s.family = Family::custom;
    s.recurrence = std::move(rec);
    return s;
}

void BasisSpec::validate() const {
    if (family == Family::hermite_probabilist && alpha <= 0)
        throw std::invalid_argument("hermite-prob requires alpha > 0");
    if (family == Family::hermite_physicist_scaled && beta == 0)
        throw std::invalid_argument("hermite-phys-scaled requires beta != 0");
    if (family == Family::custom) {
        if (!recurrence) throw std::invalid_argument("custom family requires a recurrence");
        if (recurrence->p0 == 0) throw std::invalid_argument("recurrence requires p0 != 0");
        for (const auto& l : recurrence->lambda)
            if (l <= 0) throw std::invalid_argument("recurrence requires lambda_n > 0");
    } else if (recurrence) {
        throw std::invalid_argument("recurrence given for a non-custom family");
    }
}

BasisSequence::BasisSequence(BasisSpec spec) : spec_(std::move(spec)) {
    spec_.validate();
}

const Polynomial& BasisSequence::at(std::size_t n) {
    if (n < memo_.size()) return memo_[n];
    switch (spec_.family) {
        case Family::monomial:
            for (std::size_t k = memo_.size(); k <= n; ++k)
                memo_.push_back(Polynomial::monomial(Rational(1), k));
            break;
        case Family::hermite_probabilist:
        case Family::custom: {
            const bool custom = spec_.family == Family::custom;
            if (custom && n > spec_.recurrence->max_n())
                throw std::invalid_argument("recurrence data exhausted before requested degree");
            if (memo_.empty())
                memo_.push_back(Polynomial::constant(custom ? spec_.recurrence->p0 : Rational(1)));
            for (std::size_t k = memo_.size(); k <= n; ++k) {
                const Rational c = custom ? spec_.recurrence->c[k - 1] : Rational(0);
                const Rational lambda = [&]() -> Rational {
                    if (k < 2) return Rational(0);
                    if (custom) return spec_.recurrence->lambda[k - 2];
                    return spec_.alpha * Rational(static_cast<long>(k) - 1);
                }();
                Polynomial next = Polynomial({-c, Rational(1)}) * memo_[k - 1];
                if (k >= 2) next -= lambda * memo_[k - 2];
                memo_.push_back(std::move(next));
            }
            break;
        }
        case Family::hermite_physicist:
            for (std::size_t k = memo_.size(); k <= n; ++k)
                memo_.push_back(hermite_physicist_closed(k));
            break;
        case Family::hermite_physicist_scaled:
            for (std::size_t k = memo_.size(); k <= n; ++k)
                memo_.push_back(
                    compose_affine(hermite_physicist_closed(k), spec_.beta / 2, Rational(0)));
            break;
        case Family::laguerre:
            for (std::size_t k = memo_.size(); k <= n; ++k) memo_.push_back(laguerre_closed(k));
            break;
        case Family::chebyshev:
            for (std::size_t k = memo_.size(); k <= n; ++k) memo_.push_back(chebyshev_closed(k));
            break;
        case Family::legendre:
            for (std::size_t k = memo_.size(); k <= n; ++k) memo_.push_back(legendre_closed(k));
            break;
    }
    return memo_[n];
}

Polynomial basis_poly(const BasisSpec& spec, std::size_t n) {
    BasisSequence seq(spec);
    return seq.at(n);
}

Polynomial hermite_via_heat_operator(std::size_t n, const Rational& alpha) {
    if (alpha <= 0) throw std::invalid_argument("heat-operator Hermite requires alpha > 0");
    // sum_k (-alpha/2)^k / k! * D^(2k) x^n, nonzero only while 2k <= n
    std::vector<Rational> coeffs(n + 1, Rational(0));
    const Rational step = -alpha / 2;
    Rational factor(1);
    for (std::size_t k = 0; 2 * k <= n; ++k) {
        if (k > 0) factor = factor * step / Rational(static_cast<long>(k));
        Rational fall(factorial(n), factorial(n - 2 * k));
        fall.canonicalize();
        coeffs[n - 2 * k] = factor * fall;
    }
    return Polynomial(std::move(coeffs));
}

Polynomial legendre_via_rodrigues(std::size_t n) {
    Polynomial p = poly_pow(Polynomial({Rational(-1), Rational(0), Rational(1)}), n);
    for (std::size_t k = 0; k < n; ++k) p = derivative(p);
    Rational scale(1, Integer(1) << n);
    scale.canonicalize();
    return scale / Rational(factorial(n)) * p;
}

Polynomial laguerre_via_ddq(std::size_t n) {
    Polynomial l = Polynomial::constant(Rational(1));
    const Polynomial x = Polynomial::monomial(Rational(1), 1);
    for (std::size_t k = 0; k < n; ++k) {
        const Rational kp1(static_cast<long>(k) + 1);
        Polynomial next = x * derivative(l) + (Polynomial::constant(kp1) - x) * l;
        next /= kp1;
        l = std::move(next);
    }
    return l;
}

}  // namespace qop
