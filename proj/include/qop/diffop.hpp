#ifndef QOP_DIFFOP_HPP
#define QOP_DIFFOP_HPP

#include <vector>

#include "qop/bases.hpp"
#include "qop/polynomial.hpp"

namespace qop {

/// Finite truncation (Q_0, ..., Q_N) of the differential-operator
/// representation T = sum_k Q_k(x)/k! D^k of a linear map on polynomials.
/// Acting on inputs of degree <= N needs no terms beyond Q_N.
struct OperatorRep {
    std::vector<Polynomial> q;

    std::size_t truncation_order() const { return q.size() - 1; }
};

/// Extracts Q_0..Q_order for the transformation x^n -> P_n(x) from
/// Q_n(x) = sum_k binom(n,k) P_k(x) (-x)^(n-k).
OperatorRep coefficient_polys(const BasisSpec& spec, std::size_t order);

/// sum_k Q_k(x) p^(k)(x) / k!. Rejects deg p > truncation order, where the
/// truncated sum would silently drop terms.
Polynomial apply_operator(const OperatorRep& rep, const Polynomial& p);

/// Q_n for x^n -> H_n(beta/2 x), namely H_n((beta-1)/2 x). Requires beta != 0;
/// beta = 1 is the degenerate in-family case with constant Q_n = H_n(0).
Polynomial closed_form_q_hermite_scaled(std::size_t n, const Rational& beta);

/// Q_k for the Laguerre transformation:
/// sum_r [ binom(k,r) sum_l binom(r,l)/l! ] (-x)^r.
Polynomial closed_form_q_laguerre(std::size_t k);

/// Q_2k = (x^2-1)^k and Q_(2k+1) = 0 for the Chebyshev transformation.
Polynomial closed_form_q_chebyshev(std::size_t n);

/// Q_2k = (2k-1)!!/(2k)!! (x^2-1)^k and Q_(2k+1) = 0 for Legendre.
Polynomial closed_form_q_legendre(std::size_t n);

/// Dispatch over the four families with a known closed form
/// (hermite_physicist_scaled takes beta; the rest ignore it).
Polynomial closed_form_q(Family family, std::size_t n, const Rational& beta = Rational(2));
bool has_closed_form_q(Family family);

enum class CTableMode { recursion, closed_form };

/// Constants C_(k,l) appearing in the expansion of D^k[(x^2-1)^n]; both modes
/// agree on the whole validity triangle and return 0 out of range.
Rational legendre_c(long k, long l, CTableMode mode);

/// D^k[(x^2-1)^n] assembled from the C table:
/// sum_l (x^2-1)^(n-k+l) x^(k-2l) n!/(n-k+l)! 2^(k-l) C_(k,l).
/// Requires 0 <= k <= n.
Polynomial legendre_derivative_expansion(long n, long k);

}  // namespace qop

#endif
