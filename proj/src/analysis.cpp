#include "qop/analysis.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>

#include "qop/diffop.hpp"

namespace qop {

bool is_appell(const std::vector<Polynomial>& seq) {
    if (seq.size() < 2) throw std::invalid_argument("is_appell needs at least two members");
    for (std::size_t i = 0; i < seq.size(); ++i)
        if (seq[i].degree() != static_cast<long>(i))
            throw std::invalid_argument("is_appell: member degree must equal its index");
    for (std::size_t n = 1; n < seq.size(); ++n)
        if (derivative(seq[n]) != Rational(static_cast<long>(n)) * seq[n - 1]) return false;
    return true;
}

ThreeTermRecurrence fit_three_term(const std::vector<Polynomial>& seq) {
    if (seq.size() < 3) throw std::invalid_argument("fit_three_term needs at least three members");
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (seq[i].degree() != static_cast<long>(i))
            throw std::invalid_argument("fit_three_term: member degree must equal its index");
        if (seq[i].leading() != seq[0].leading())
            throw std::invalid_argument("fit_three_term: leading coefficients must all agree");
    }
    const Rational lead = seq[0].leading();
    ThreeTermRecurrence rec;
    rec.p0 = lead;

    // c_1 from P_1 = (x - c_1) P_0
    rec.c.push_back(-seq[1].coeff(0) / lead);

    const Polynomial x = Polynomial::monomial(Rational(1), 1);
    for (std::size_t n = 2; n < seq.size(); ++n) {
        // x P_(n-1) - P_n = c_n P_(n-1) + lambda_n P_(n-2): read off the two
        // top coefficients, then demand a zero residual
        const Polynomial rhs = x * seq[n - 1] - seq[n];
        const Rational c_n = rhs.coeff(n - 1) / seq[n - 1].leading();
        const Polynomial rest = rhs - c_n * seq[n - 1];
        const Rational lambda_n = rest.coeff(n - 2) / seq[n - 2].leading();
        if (rest - lambda_n * seq[n - 2] != Polynomial::zero())
            throw std::domain_error("not a three-term sequence");
        rec.c.push_back(c_n);
        rec.lambda.push_back(lambda_n);
    }
    return rec;
}

ClassificationReport classify_constant_coefficient_operator(const std::vector<Rational>& gammas) {
    if (gammas.size() < 3)
        throw std::invalid_argument("classification needs at least gamma_0..gamma_2");
    if (gammas[0] == 0) throw std::invalid_argument("classification requires gamma_0 != 0");

    ClassificationReport report;
    report.gamma0 = gammas[0];
    report.n_max = gammas.size() - 1;
    report.const_coeffs = true;  // the operator is handed over by its gammas

    // P_n(x) = sum_k gamma_(n-k) binom(n,k) x^k
    std::vector<Polynomial> seq;
    seq.reserve(gammas.size());
    for (std::size_t n = 0; n < gammas.size(); ++n) {
        std::vector<Rational> coeffs(n + 1);
        for (std::size_t k = 0; k <= n; ++k)
            coeffs[k] =
                gammas[n - k] * Rational(binomial(static_cast<long>(n), static_cast<long>(k)));
        seq.emplace_back(std::move(coeffs));
    }

    report.is_appell = is_appell(seq);
    report.appell = report.is_appell;

    report.beta = -gammas[1] / gammas[0];
    report.alpha = (gammas[1] * gammas[1] - gammas[0] * gammas[2]) / (gammas[0] * gammas[0]);
    report.is_real_ops = report.alpha > 0;

    try {
        const ThreeTermRecurrence fitted = fit_three_term(seq);
        bool matches = true;
        for (const auto& c : fitted.c) matches = matches && c == report.beta;
        for (std::size_t i = 0; i < fitted.lambda.size(); ++i)
            matches =
                matches && fitted.lambda[i] == report.alpha * Rational(static_cast<long>(i) + 1);
        report.recurrence = matches && report.is_real_ops;
    } catch (const std::domain_error&) {
        report.recurrence = false;
    }

    if (report.is_real_ops) {
        bool shift_ok = true;
        BasisSequence hermite(BasisSpec::hermite_probabilist(report.alpha));
        for (std::size_t n = 0; n < seq.size() && shift_ok; ++n)
            shift_ok = seq[n] ==
                       report.gamma0 * compose_affine(hermite.at(n), Rational(1), -report.beta);
        report.hermite_shift = shift_ok;
    }
    return report;
}

StabilityVerdict stability_orientation(const BasisSpec& spec) {
    BasisSequence seq(spec);
    const Polynomial p1 = seq.at(1);  // copy: at() may extend the memo
    const Polynomial p0 = seq.at(0);
    if (p1.degree() != 1)
        throw std::invalid_argument("stability orientation requires deg P_1 = 1");
    // T[x - i] = P_1(x) - i P_0(x) = a x + (b - i c); root = (-b + i c) / a
    const Rational a = p1.coeff(1), b = p1.coeff(0), c = p0.coeff(0);
    StabilityVerdict verdict;
    verdict.witness_root = ComplexRational(-b / a, c / a);
    const int s = sign(verdict.witness_root.im);
    verdict.orientation = s > 0   ? Orientation::preserving
                          : s < 0 ? Orientation::reversing
                                  : Orientation::indeterminate;
    return verdict;
}

bool verify_laguerre_ddq(std::size_t n) {
    const Polynomial q_n = closed_form_q_laguerre(n);
    const Polynomial q_next = closed_form_q_laguerre(n + 1);
    const Rational np1(static_cast<long>(n) + 1);
    const Polynomial a({Rational(0), Rational(1), Rational(-2), Rational(1)});  // x - 2x^2 + x^3
    const Polynomial b({np1, Rational(-2), -Rational(static_cast<long>(n))});
    return np1 * q_next == a * derivative(q_n) + b * q_n;
}

namespace {

struct MemberAnalysis {
    std::size_t index = 0;
    const Polynomial* poly = nullptr;
    bool simple_real = false;
    std::unique_ptr<SturmChain> chain;
    std::vector<IsolatingInterval> roots;
};

bool intervals_overlap(const IsolatingInterval& a, const IsolatingInterval& b) {
    return !(a.hi <= b.lo || b.hi <= a.lo);
}

// halve an isolating interval, keeping the half that holds the root
void bisect_once(const SturmChain& chain, IsolatingInterval& iv) {
    const Rational mid = (iv.lo + iv.hi) / 2;
    if (chain.count_half_open(iv.lo, mid) == 1)
        iv.hi = mid;
    else
        iv.lo = mid;
}

// Strict interlacing of lower (n roots) and upper (n+1 roots), both already
// certified simple-real: no shared root, and the merged isolating intervals
// alternate upper, lower, upper, ..., upper.
bool strictly_interlace(MemberAnalysis& lower, MemberAnalysis& upper) {
    if (upper.roots.size() != lower.roots.size() + 1) return false;
    if (poly_gcd(*lower.poly, *upper.poly).degree() > 0) return false;

    auto lo_iv = lower.roots;
    auto up_iv = upper.roots;
    for (auto& a : lo_iv)
        for (auto& b : up_iv)
            while (intervals_overlap(a, b)) {
                if (a.hi - a.lo >= b.hi - b.lo)
                    bisect_once(*lower.chain, a);
                else
                    bisect_once(*upper.chain, b);
            }

    std::vector<std::pair<IsolatingInterval, bool>> merged;  // flag: belongs to upper
    for (const auto& iv : lo_iv) merged.emplace_back(iv, false);
    for (const auto& iv : up_iv) merged.emplace_back(iv, true);
    std::sort(merged.begin(), merged.end(),
              [](const auto& a, const auto& b) { return a.first.lo < b.first.lo; });
    for (std::size_t i = 0; i < merged.size(); ++i)
        if (merged[i].second != (i % 2 == 0)) return false;
    return true;
}

}  // namespace

bool all_roots_in_open_interval(const Polynomial& p, const Rational& lo, const Rational& hi) {
    if (p.is_zero()) throw std::invalid_argument("all_roots_in_open_interval: zero polynomial");
    if (!(lo < hi)) throw std::invalid_argument("all_roots_in_open_interval: requires lo < hi");
    if (p.degree() == 0) return true;
    if (real_rootedness(p) != RootReality::all_real) return false;
    if (p(lo) == 0 || p(hi) == 0) return false;
    SturmChain chain(p);
    return chain.count_half_open(lo, hi) == chain.count_all_real();
}

InterlacingReport interlacing_report(const std::vector<Polynomial>& seq,
                                     const InterlacingOptions& options) {
    InterlacingReport report;
    report.n_checked = seq.size();
    report.witness_intervals.resize(seq.size());

    std::vector<MemberAnalysis> members;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (seq[i].is_zero()) {
            if (!options.skip_zero_members)
                throw std::invalid_argument(
                    "interlacing_report: zero member without the skip rule enabled");
            ++report.zero_members_skipped;
            continue;
        }
        if (seq[i].degree() != static_cast<long>(i))
            throw std::invalid_argument("interlacing_report: member degree must equal its index");
        MemberAnalysis m;
        m.index = i;
        m.poly = &seq[i];
        members.push_back(std::move(m));
    }

    report.all_real = true;
    report.strictly_interlacing = true;
    report.all_in_unit_interval = options.interval.has_value();
    for (auto& m : members) {
        m.chain = std::make_unique<SturmChain>(*m.poly);
        const long deg = m.poly->degree();
        const bool squarefree = poly_gcd(*m.poly, derivative(*m.poly)).degree() == 0;
        const long distinct = m.chain->count_all_real();
        m.simple_real = squarefree && distinct == deg;
        report.all_real = report.all_real && distinct == m.chain->squarefree_degree();
        report.strictly_interlacing = report.strictly_interlacing && m.simple_real;
        m.roots = isolate_real_roots(*m.poly);
        report.witness_intervals[m.index] = m.roots;
        if (options.interval) {
            const auto& [lo, hi] = *options.interval;
            report.all_in_unit_interval =
                report.all_in_unit_interval && all_roots_in_open_interval(*m.poly, lo, hi);
        }
    }
    if (report.strictly_interlacing)
        for (std::size_t i = 0; i + 1 < members.size(); ++i)
            if (!strictly_interlace(members[i], members[i + 1])) {
                report.strictly_interlacing = false;
                break;
            }
    return report;
}

bool unit_disk_image_check(const std::vector<Rational>& coeffs, Family family) {
    if (family != Family::chebyshev && family != Family::legendre)
        throw std::invalid_argument("unit_disk_image_check supports chebyshev and legendre");
    BasisSequence seq{family == Family::chebyshev ? BasisSpec::chebyshev() : BasisSpec::legendre()};
    Polynomial image;
    for (std::size_t k = 0; k < coeffs.size(); ++k) image += coeffs[k] * seq.at(k);
    if (image.is_zero())
        throw std::invalid_argument("unit_disk_image_check: zero input polynomial");
    return all_roots_in_open_interval(image, Rational(-1), Rational(1));
}

}  // namespace qop
