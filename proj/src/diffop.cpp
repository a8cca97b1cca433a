#include "qop/diffop.hpp"

#include <stdexcept>
#include <utility>

namespace qop {

OperatorRep coefficient_polys(const BasisSpec& spec, std::size_t order) {
    BasisSequence seq(spec);
    OperatorRep rep;
    rep.q.reserve(order + 1);
    const Polynomial neg_x = Polynomial::monomial(Rational(-1), 1);
    for (std::size_t n = 0; n <= order; ++n) {
        // Horner accumulation of sum_k binom(n,k) P_k (-x)^(n-k)
        Polynomial acc;
        for (std::size_t k = 0; k <= n; ++k) {
            acc = acc * neg_x;
            acc += Rational(binomial(static_cast<long>(n), static_cast<long>(k))) * seq.at(k);
        }
        rep.q.push_back(std::move(acc));
    }
    return rep;
}

Polynomial apply_operator(const OperatorRep& rep, const Polynomial& p) {
    if (p.degree() > static_cast<long>(rep.truncation_order()))
        throw std::invalid_argument("apply_operator: input degree exceeds truncation order");
    Polynomial result;
    Polynomial deriv = p;
    Rational inv_fact(1);
    for (std::size_t k = 0; !deriv.is_zero(); ++k) {
        if (k > 0) inv_fact /= Rational(static_cast<long>(k));
        result += rep.q[k] * deriv * inv_fact;
        deriv = derivative(deriv);
    }
    return result;
}

Polynomial closed_form_q_hermite_scaled(std::size_t n, const Rational& beta) {
    if (beta == 0) throw std::invalid_argument("closed-form Hermite Q requires beta != 0");
    return compose_affine(basis_poly(BasisSpec::hermite_physicist(), n), (beta - 1) / 2,
                          Rational(0));
}

Polynomial closed_form_q_laguerre(std::size_t k) {
    std::vector<Rational> coeffs(k + 1);
    for (std::size_t r = 0; r <= k; ++r) {
        Rational inner(0);
        for (std::size_t l = 0; l <= r; ++l) {
            Rational term(binomial(static_cast<long>(r), static_cast<long>(l)), factorial(l));
            term.canonicalize();
            inner += term;
        }
        inner *= Rational(binomial(static_cast<long>(k), static_cast<long>(r)));
        if (r % 2 != 0) inner = -inner;
        coeffs[r] = std::move(inner);
    }
    return Polynomial(std::move(coeffs));
}

Polynomial closed_form_q_chebyshev(std::size_t n) {
    if (n % 2 != 0) return Polynomial::zero();
    return poly_pow(Polynomial({Rational(-1), Rational(0), Rational(1)}), n / 2);
}

Polynomial closed_form_q_legendre(std::size_t n) {
    if (n % 2 != 0) return Polynomial::zero();
    const std::size_t k = n / 2;
    Rational scale(double_factorial(2 * static_cast<long>(k) - 1),
                   double_factorial(2 * static_cast<long>(k)));
    scale.canonicalize();
    return scale * poly_pow(Polynomial({Rational(-1), Rational(0), Rational(1)}), k);
}

Polynomial closed_form_q(Family family, std::size_t n, const Rational& beta) {
    switch (family) {
        case Family::hermite_physicist: return closed_form_q_hermite_scaled(n, Rational(2));
        case Family::hermite_physicist_scaled: return closed_form_q_hermite_scaled(n, beta);
        case Family::laguerre: return closed_form_q_laguerre(n);
        case Family::chebyshev: return closed_form_q_chebyshev(n);
        case Family::legendre: return closed_form_q_legendre(n);
        default: throw std::invalid_argument("no closed-form Q for family " + family_name(family));
    }
}

bool has_closed_form_q(Family family) {
    switch (family) {
        case Family::hermite_physicist:
        case Family::hermite_physicist_scaled:
        case Family::laguerre:
        case Family::chebyshev:
        case Family::legendre: return true;
        default: return false;
    }
}

namespace {

// C_(k,l) = C_(k-1,l) + (k - 2l + 1) C_(k-1,l-1), unrolled row by row
Rational legendre_c_recursive(long k, long l) {
    std::vector<Rational> row{Rational(1)};
    for (long kk = 1; kk <= k; ++kk) {
        std::vector<Rational> next(static_cast<std::size_t>(kk / 2) + 1, Rational(0));
        for (long ll = 0; ll <= kk / 2; ++ll) {
            Rational value(0);
            if (ll <= (kk - 1) / 2) value += row[static_cast<std::size_t>(ll)];
            if (ll >= 1 && ll - 1 <= (kk - 1) / 2)
                value += Rational(kk - 2 * ll + 1) * row[static_cast<std::size_t>(ll - 1)];
            next[static_cast<std::size_t>(ll)] = std::move(value);
        }
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(l)];
}

}  // namespace

Rational legendre_c(long k, long l, CTableMode mode) {
    if (k < 0 || l < 0 || l > k / 2) return Rational(0);
    if (mode == CTableMode::recursion) return legendre_c_recursive(k, l);
    // (2l-1)!! k! l! 2^l / ((2l)!! (k-2l)! (2l)!)
    Integer num = double_factorial(2 * l - 1) * factorial(static_cast<unsigned long>(k)) *
                  factorial(static_cast<unsigned long>(l));
    mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(l));
    Integer den = double_factorial(2 * l) * factorial(static_cast<unsigned long>(k - 2 * l)) *
                  factorial(static_cast<unsigned long>(2 * l));
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Polynomial legendre_derivative_expansion(long n, long k) {
    if (n < 0 || k < 0 || k > n)
        throw std::invalid_argument("legendre_derivative_expansion requires 0 <= k <= n");
    const Polynomial x2m1({Rational(-1), Rational(0), Rational(1)});
    Polynomial sum;
    for (long l = 0; 2 * l <= k; ++l) {
        Rational fall(factorial(static_cast<unsigned long>(n)),
                      factorial(static_cast<unsigned long>(n - k + l)));
        fall.canonicalize();
        Integer two_pow(1);
        mpz_mul_2exp(two_pow.get_mpz_t(), two_pow.get_mpz_t(), static_cast<unsigned long>(k - l));
        const Rational coef =
            fall * Rational(two_pow) * legendre_c(k, l, CTableMode::recursion);
        sum += coef * (poly_pow(x2m1, static_cast<unsigned long>(n - k + l)) *
                       Polynomial::monomial(Rational(1), static_cast<std::size_t>(k - 2 * l)));
    }
    return sum;
}

}  // namespace qop
