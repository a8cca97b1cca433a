#ifndef QOP_SUITES_HPP
#define QOP_SUITES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "qop/io.hpp"

namespace qop {

struct CheckResult {
    std::string label;
    bool pass = false;
    Json details;  // witness payload, may be null
};

struct SuiteReport {
    std::string suite;
    Json params;
    std::vector<CheckResult> checks;

    bool all_pass() const;
    /// Label of the first failing check, or empty.
    std::string first_failure() const;
    Json to_json() const;
};

// Reconstruction: apply_operator(coefficient_polys(spec, order), x^n) recovers
// basis_poly(spec, n) for every family and n <= n_max.
SuiteReport suite_reconstruction(std::size_t n_max);

// Extracted Hermite Q's match H_n((beta-1)/2 x) for beta in {2, -2, 3}, and
// the reversed-transformation identity Q_k^-(x) = Q_k^+(-3x).
SuiteReport suite_hermite_closed_form(std::size_t n_max);

// Extracted Laguerre Q's match the double-binomial closed form; Q_1 = 1 - 2x.
SuiteReport suite_laguerre_closed_form(std::size_t n_max);

// Differential-difference identity for the Laguerre Q's, plus the three
// binomial coefficient identities used in its derivation.
SuiteReport suite_ddq(std::size_t n_max, std::size_t binom_n_max);

// Sturm-certified: Q_n has n simple real roots in (0,1), strictly
// interlacing with Q_(n+1), for n <= n_max.
SuiteReport suite_interlacing_laguerre(std::size_t n_max);

// Same certification for the rescaled-Hermite coefficient polynomials.
SuiteReport suite_interlacing_hermite(std::size_t n_max, const Rational& beta);

// Both generating functions reproduce L_n / Q_n through w^order, and the
// PDE residual of the Q generating series vanishes through order-1.
SuiteReport suite_genfun(std::size_t order);

// Legendre: extracted Q's match (2k-1)!!/(2k)!! (x^2-1)^k with odd Q's zero;
// C-table recursion agrees with its closed form on the whole triangle;
// the D^k[(x^2-1)^n] expansion equals direct differentiation.
SuiteReport suite_legendre(std::size_t q_n_max, long c_k_max, long dk_n_max);

// Chebyshev: extracted Q_2k = (x^2-1)^k, odd Q's zero.
SuiteReport suite_chebyshev(std::size_t k_max);

// Random constant-coefficient operators from exp(-(alpha/2)z^2 - beta z):
// recovered (beta, alpha) are exact and the shifted-Hermite identity holds
// through n_max; one alpha <= 0 case must be flagged as not a real OPS.
SuiteReport suite_classification(std::size_t count, std::uint64_t seed, std::size_t n_max);

// Orientation witnesses for the classical transformations.
SuiteReport suite_stability();

// Zero-location: seeded random polynomials built from recorded factors.
// Chebyshev inputs draw roots from the open unit disk; Legendre inputs draw
// real roots from (-1,1), matching the hypotheses of the two theorems being
// exercised. Images must have every root in (-1,1), certified by Sturm counts.
SuiteReport suite_disk_image(std::size_t count, std::uint64_t seed, std::size_t max_degree,
                             Family family);

}  // namespace qop

#endif
