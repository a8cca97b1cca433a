#ifndef QOP_SERIES_HPP
#define QOP_SERIES_HPP

#include <vector>

#include "qop/polynomial.hpp"

namespace qop {

/// Power series in w truncated at a fixed order N, with polynomial-in-x
/// coefficients. All arithmetic discards terms of w-order above N, so every
/// result is the exact truncation of the exact result.
class TruncatedBivariateSeries {
  public:
    TruncatedBivariateSeries(std::size_t order, std::vector<Polynomial> coeffs);

    static TruncatedBivariateSeries zero(std::size_t order);
    static TruncatedBivariateSeries one(std::size_t order);

    std::size_t order() const { return coeffs_.size() - 1; }
    const Polynomial& coeff(std::size_t k) const { return coeffs_[k]; }
    const std::vector<Polynomial>& coeffs() const { return coeffs_; }

    bool is_zero() const;

    friend TruncatedBivariateSeries operator+(const TruncatedBivariateSeries& a,
                                              const TruncatedBivariateSeries& b);
    friend TruncatedBivariateSeries operator-(const TruncatedBivariateSeries& a,
                                              const TruncatedBivariateSeries& b);
    friend TruncatedBivariateSeries operator*(const TruncatedBivariateSeries& a,
                                              const TruncatedBivariateSeries& b);
    friend bool operator==(const TruncatedBivariateSeries& a, const TruncatedBivariateSeries& b) {
        return a.coeffs_ == b.coeffs_;
    }

  private:
    std::vector<Polynomial> coeffs_;  // size order + 1
};

/// 1/a up to the shared order; requires the w^0 coefficient to be a nonzero
/// constant polynomial.
TruncatedBivariateSeries series_reciprocal(const TruncatedBivariateSeries& a);

/// exp(a) up to the shared order; requires zero w^0 coefficient.
TruncatedBivariateSeries series_exp(const TruncatedBivariateSeries& a);

/// exp(w x / (w-1)) / (1-w); the w^n coefficient is the Laguerre polynomial L_n.
TruncatedBivariateSeries laguerre_generating(std::size_t order);

/// exp(-w x / (w(x-1)+1)) / (w(x-1)+1); the w^n coefficient is the Laguerre
/// coefficient polynomial Q_n.
TruncatedBivariateSeries laguerre_q_generating(std::size_t order);

/// Residual of x(x-1)^2 G_x + (1-x^2) w G_w + (1-2x) G - G_w, truncated at
/// order N-1 (differentiating in w loses one order). Requires order >= 1.
TruncatedBivariateSeries pde_residual(const TruncatedBivariateSeries& g);

}  // namespace qop

#endif
