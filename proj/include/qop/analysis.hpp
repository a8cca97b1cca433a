#ifndef QOP_ANALYSIS_HPP
#define QOP_ANALYSIS_HPP

#include <optional>
#include <utility>
#include <vector>

#include "qop/bases.hpp"
#include "qop/polynomial.hpp"
#include "qop/sturm.hpp"

namespace qop {

/// True iff P_n' = n P_(n-1) for every consecutive pair. Element i must have
/// degree exactly i; mismatches are rejected.
bool is_appell(const std::vector<Polynomial>& seq);

/// Fits P_n = (x - c_n) P_(n-1) - lambda_n P_(n-2) exactly. Input must have
/// deg P_n = n, equal leading coefficients, length >= 3. The returned
/// recurrence carries c_1..c_N and lambda_2..lambda_N; positivity of the
/// lambdas is deliberately not enforced here (callers inspect it). Throws
/// std::domain_error("not a three-term sequence") when no exact fit exists.
ThreeTermRecurrence fit_three_term(const std::vector<Polynomial>& seq);

struct ClassificationReport {
    bool is_appell = false;
    Rational gamma0;
    Rational beta;
    Rational alpha;
    // conditions verified on the supplied prefix
    bool const_coeffs = false;
    bool appell = false;
    bool recurrence = false;
    bool hermite_shift = false;
    // alpha <= 0 means the recurrence has lambda_n <= 0: not a real OPS
    bool is_real_ops = false;
    std::size_t n_max = 0;  // largest n the gamma prefix determines

    bool all_verified() const { return const_coeffs && appell && recurrence && hermite_shift; }
};

/// Builds P_n = sum_k gamma_(n-k) binom(n,k) x^k from a constant-coefficient
/// operator prefix and runs the equivalence chain on it: Appell property,
/// recurrence with beta = -gamma_1/gamma_0 and
/// alpha = (gamma_1^2 - gamma_0 gamma_2)/gamma_0^2, and the shifted-Hermite
/// identity P_n = gamma_0 He_n^alpha(x - beta) when alpha > 0.
/// Requires >= 3 gammas and gamma_0 != 0.
ClassificationReport classify_constant_coefficient_operator(const std::vector<Rational>& gammas);

enum class Orientation { preserving, reversing, indeterminate };

struct StabilityVerdict {
    Orientation orientation = Orientation::indeterminate;
    ComplexRational witness_root;  // the root of T[x - i]
};

/// Orientation witness: T[x - i] = P_1(x) - i P_0(x) is linear, and the sign
/// of its root's imaginary part decides preserving vs reversing. Requires
/// deg P_1 = 1.
StabilityVerdict stability_orientation(const BasisSpec& spec);

/// Exact check of (n+1) Q_(n+1) = (x - 2x^2 + x^3) Q_n' + (n+1 - 2x - n x^2) Q_n
/// on the Laguerre closed-form coefficient polynomials.
bool verify_laguerre_ddq(std::size_t n);

struct InterlacingOptions {
    /// Compare only consecutive nonzero members instead of erroring on zero
    /// members ("almost interlacing" reading; the report labels its use).
    bool skip_zero_members = false;
    std::optional<std::pair<Rational, Rational>> interval;
};

struct InterlacingReport {
    std::size_t n_checked = 0;
    bool all_real = false;
    bool all_in_unit_interval = false;  // meaningful only when an interval was supplied
    bool strictly_interlacing = false;
    std::size_t zero_members_skipped = 0;
    std::vector<std::vector<IsolatingInterval>> witness_intervals;  // one list per member
};

/// Certifies simple real roots and strict interlacing of consecutive members
/// entirely through Sturm counts: per-member squarefree + root-count checks,
/// then disjoint isolating intervals of each pair merged and tested for strict
/// label alternation. Nonzero member i must have degree i.
InterlacingReport interlacing_report(const std::vector<Polynomial>& seq,
                                     const InterlacingOptions& options = {});

/// True iff sum_k coeffs[k] P_k (Chebyshev or Legendre basis) has all of its
/// deg-many roots, counted with multiplicity, inside (-1, 1). The caller is
/// responsible for the hypothesis that sum_k coeffs[k] x^k has its zeros in
/// the open unit disk.
bool unit_disk_image_check(const std::vector<Rational>& coeffs, Family family);

/// All complex roots of p are real and lie in the open interval (lo, hi),
/// counted with multiplicity. Exact, multiplicity-aware.
bool all_roots_in_open_interval(const Polynomial& p, const Rational& lo, const Rational& hi);

}  // namespace qop

#endif
