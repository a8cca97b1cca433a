#ifndef QOP_STURM_HPP
#define QOP_STURM_HPP

#include <vector>

#include "qop/polynomial.hpp"

namespace qop {

struct IsolatingInterval {
    Rational lo;
    Rational hi;
    // number of roots (with multiplicity) of the queried polynomial in (lo, hi]
    int multiplicity = 1;
};

/// Sturm chain of the squarefree part of a polynomial, kept as primitive
/// integer polynomials (content removed after every pseudo-remainder step so
/// coefficients stay small). Sign variations are evaluated without rational
/// division: sign(S(a/b)) = sign(sum c_j a^j b^(d-j)).
///
/// Counting convention: count_half_open(a, b) = V(a) - V(b) is the number of
/// distinct real roots of the original polynomial in the half-open interval
/// (a, b]. With zeros skipped in the variation count this is valid even when
/// an endpoint is itself a root, which is what lets root isolation proceed by
/// plain bisection with no endpoint perturbation.
class SturmChain {
  public:
    explicit SturmChain(const Polynomial& p);

    /// Distinct real roots of p in (lo, hi]. Requires lo <= hi.
    long count_half_open(const Rational& lo, const Rational& hi) const;

    /// Total number of distinct real roots of p.
    long count_all_real() const;

    /// Cauchy bound B >= 1: every real root lies strictly inside (-B, B).
    const Rational& bound() const { return bound_; }

    long squarefree_degree() const;

  private:
    long variations_at(const Rational& point) const;

    std::vector<std::vector<Integer>> chain_;
    Rational bound_;
};

/// Exact count of distinct real roots of p in the open interval (lo, hi).
/// Preconditions per contract: p nonzero, lo < hi, p(lo) != 0, p(hi) != 0;
/// violations throw std::invalid_argument.
long sturm_count(const Polynomial& p, const Rational& lo, const Rational& hi);

enum class RootReality {
    not_all_real,
    all_real,
    vacuous,  // the zero polynomial, real-rooted by convention
};

/// all_real iff the real roots counted with multiplicity exhaust deg p.
RootReality real_rootedness(const Polynomial& p);

/// RootReality collapsed to a bool (vacuous counts as real-rooted).
bool is_real_rooted(const Polynomial& p);

/// True iff p is squarefree with exactly deg p real roots.
bool has_simple_real_roots(const Polynomial& p);

/// Pairwise-disjoint intervals with rational endpoints, sorted ascending,
/// each containing exactly one distinct real root of p; multiplicity is the
/// root's multiplicity in p. Requires p nonzero.
std::vector<IsolatingInterval> isolate_real_roots(const Polynomial& p);

/// Shrinks an isolating interval (must contain exactly one root of the chain's
/// polynomial) by bisection until hi - lo <= width.
IsolatingInterval refine_interval(const SturmChain& chain, IsolatingInterval iv,
                                  const Rational& width);

}  // namespace qop

#endif
