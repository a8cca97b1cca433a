#ifndef QOP_BASES_HPP
#define QOP_BASES_HPP

#include <optional>
#include <string>
#include <vector>

#include "qop/polynomial.hpp"

namespace qop {

enum class Family {
    monomial,
    hermite_probabilist,
    hermite_physicist,
    hermite_physicist_scaled,
    laguerre,
    chebyshev,
    legendre,
    custom,
};

std::string family_name(Family f);
std::optional<Family> family_from_name(const std::string& name);

/// P_n = (x - c_n) P_{n-1} - lambda_n P_{n-2} with P_{-1} = 0, P_0 = p0.
/// c[k] holds c_{k+1} (the recurrence starts at n = 1); lambda[k] holds
/// lambda_{k+2}, since lambda_1 multiplies P_{-1} = 0 and is never used.
struct ThreeTermRecurrence {
    std::vector<Rational> c;
    std::vector<Rational> lambda;
    Rational p0{1};

    /// Largest n for which the supplied data determines P_n.
    std::size_t max_n() const;
};

struct BasisSpec {
    Family family = Family::monomial;
    Rational alpha{1};  // hermite_probabilist parameter, must be > 0
    Rational beta{2};   // hermite_physicist_scaled parameter, must be != 0
    std::optional<ThreeTermRecurrence> recurrence;

    static BasisSpec monomial();
    static BasisSpec hermite_probabilist(Rational alpha);
    static BasisSpec hermite_physicist();
    static BasisSpec hermite_physicist_scaled(Rational beta);
    static BasisSpec laguerre();
    static BasisSpec chebyshev();
    static BasisSpec legendre();
    static BasisSpec custom(ThreeTermRecurrence rec);

    /// Throws std::invalid_argument on alpha <= 0, beta == 0, lambda_n <= 0,
    /// or a missing/spurious recurrence.
    void validate() const;
};

/// Memoized generator for P_0..P_n of one basis. Values are immutable once
/// produced; a sequence object itself is not for unsynchronized shared use,
/// so create one per calling context.
class BasisSequence {
  public:
    explicit BasisSequence(BasisSpec spec);

    const Polynomial& at(std::size_t n);
    const BasisSpec& spec() const { return spec_; }

  private:
    BasisSpec spec_;
    std::vector<Polynomial> memo_;
};

/// P_n(x) for the given family, by its primary construction (closed form for
/// the classical families, recurrence unrolling otherwise).
Polynomial basis_poly(const BasisSpec& spec, std::size_t n);

/// He_n^alpha via the heat-flow operator: sum_k (-alpha/2)^k / k! D^(2k) x^n.
Polynomial hermite_via_heat_operator(std::size_t n, const Rational& alpha);

/// P_n via n-fold differentiation of (x^2-1)^n / (2^n n!).
Polynomial legendre_via_rodrigues(std::size_t n);

/// L_n built iteratively from L_(n+1) = (x L_n' + (n+1-x) L_n) / (n+1).
Polynomial laguerre_via_ddq(std::size_t n);

}  // namespace qop

#endif
