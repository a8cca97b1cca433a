#include "qop/series.hpp"

#include <stdexcept>

namespace qop {

namespace {

void require_same_order(const TruncatedBivariateSeries& a, const TruncatedBivariateSeries& b) {
    if (a.order() != b.order())
        throw std::invalid_argument("series arithmetic requires matching truncation orders");
}

}  // namespace

TruncatedBivariateSeries::TruncatedBivariateSeries(std::size_t order,
                                                   std::vector<Polynomial> coeffs)
    : coeffs_(std::move(coeffs)) {
    coeffs_.resize(order + 1);
}

TruncatedBivariateSeries TruncatedBivariateSeries::zero(std::size_t order) {
    return TruncatedBivariateSeries(order, {});
}

TruncatedBivariateSeries TruncatedBivariateSeries::one(std::size_t order) {
    return TruncatedBivariateSeries(order, {Polynomial::constant(Rational(1))});
}

bool TruncatedBivariateSeries::is_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

TruncatedBivariateSeries operator+(const TruncatedBivariateSeries& a,
                                   const TruncatedBivariateSeries& b) {
    require_same_order(a, b);
    std::vector<Polynomial> out(a.coeffs_);
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += b.coeffs_[k];
    return TruncatedBivariateSeries(a.order(), std::move(out));
}

TruncatedBivariateSeries operator-(const TruncatedBivariateSeries& a,
                                   const TruncatedBivariateSeries& b) {
    require_same_order(a, b);
    std::vector<Polynomial> out(a.coeffs_);
    for (std::size_t k = 0; k < out.size(); ++k) out[k] -= b.coeffs_[k];
    return TruncatedBivariateSeries(a.order(), std::move(out));
}

TruncatedBivariateSeries operator*(const TruncatedBivariateSeries& a,
                                   const TruncatedBivariateSeries& b) {
    require_same_order(a, b);
    const std::size_t n = a.order();
    std::vector<Polynomial> out(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; i + j <= n; ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return TruncatedBivariateSeries(n, std::move(out));
}

TruncatedBivariateSeries series_reciprocal(const TruncatedBivariateSeries& a) {
    const Polynomial& head = a.coeff(0);
    if (head.is_zero() || !head.is_constant())
        throw std::invalid_argument("series reciprocal requires a nonzero constant w^0 term");
    const Rational inv_head = Rational(1) / head.coeff(0);
    const std::size_t n = a.order();
    std::vector<Polynomial> out(n + 1);
    out[0] = Polynomial::constant(inv_head);
    for (std::size_t k = 1; k <= n; ++k) {
        Polynomial acc;
        for (std::size_t j = 1; j <= k; ++j) acc += a.coeff(j) * out[k - j];
        out[k] = -inv_head * acc;
    }
    return TruncatedBivariateSeries(n, std::move(out));
}

TruncatedBivariateSeries series_exp(const TruncatedBivariateSeries& a) {
    if (!a.coeff(0).is_zero())
        throw std::invalid_argument("series exp requires a zero w^0 term");
    // E' = a' E in w, coefficientwise: k E_k = sum_j j a_j E_(k-j)
    const std::size_t n = a.order();
    std::vector<Polynomial> out(n + 1);
    out[0] = Polynomial::constant(Rational(1));
    for (std::size_t k = 1; k <= n; ++k) {
        Polynomial acc;
        for (std::size_t j = 1; j <= k; ++j)
            acc += Rational(static_cast<long>(j)) * (a.coeff(j) * out[k - j]);
        out[k] = acc / Rational(static_cast<long>(k));
    }
    return TruncatedBivariateSeries(n, std::move(out));
}

TruncatedBivariateSeries laguerre_generating(std::size_t order) {
    // w/(w-1) = -w * 1/(1-w), then scale by x, exponentiate, divide by 1-w
    std::vector<Polynomial> one_minus_w(order + 1);
    one_minus_w[0] = Polynomial::constant(Rational(1));
    if (order >= 1) one_minus_w[1] = Polynomial::constant(Rational(-1));
    const auto geom = series_reciprocal(TruncatedBivariateSeries(order, std::move(one_minus_w)));

    std::vector<Polynomial> arg(order + 1);
    const Polynomial minus_x = Polynomial::monomial(Rational(-1), 1);
    for (std::size_t k = 1; k <= order; ++k) arg[k] = minus_x * geom.coeff(k - 1);
    return series_exp(TruncatedBivariateSeries(order, std::move(arg))) * geom;
}

TruncatedBivariateSeries laguerre_q_generating(std::size_t order) {
    // 1/(w(x-1)+1) as the geometric series in -w(x-1): unit constant term by
    // construction, no general reciprocal needed
    const Polynomial neg_xm1({Rational(1), Rational(-1)});  // -(x-1)
    std::vector<Polynomial> inv(order + 1);
    inv[0] = Polynomial::constant(Rational(1));
    for (std::size_t k = 1; k <= order; ++k) inv[k] = inv[k - 1] * neg_xm1;
    const TruncatedBivariateSeries denominator_inverse(order, std::move(inv));

    // -wx / (w(x-1)+1)
    std::vector<Polynomial> arg(order + 1);
    const Polynomial minus_x = Polynomial::monomial(Rational(-1), 1);
    for (std::size_t k = 1; k <= order; ++k) arg[k] = minus_x * denominator_inverse.coeff(k - 1);

    return series_exp(TruncatedBivariateSeries(order, std::move(arg))) * denominator_inverse;
}

TruncatedBivariateSeries pde_residual(const TruncatedBivariateSeries& g) {
    if (g.order() < 1) throw std::invalid_argument("pde_residual requires order >= 1");
    const std::size_t out_order = g.order() - 1;
    const Polynomial x_xm1_sq({Rational(0), Rational(1), Rational(-2), Rational(1)});  // x(x-1)^2
    const Polynomial one_minus_x_sq({Rational(1), Rational(0), Rational(-1)});
    const Polynomial one_minus_2x({Rational(1), Rational(-2)});
    std::vector<Polynomial> res(out_order + 1);
    for (std::size_t k = 0; k <= out_order; ++k) {
        res[k] = x_xm1_sq * derivative(g.coeff(k)) +
                 Rational(static_cast<long>(k)) * (one_minus_x_sq * g.coeff(k)) +
                 one_minus_2x * g.coeff(k) -
                 Rational(static_cast<long>(k) + 1) * g.coeff(k + 1);
    }
    return TruncatedBivariateSeries(out_order, std::move(res));
}

}  // namespace qop
