#include "qop/suites.hpp"

#include <random>

namespace qop {

bool SuiteReport::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

std::string SuiteReport::first_failure() const {
    for (const auto& c : checks)
        if (!c.pass) return c.label;
    return {};
}

Json SuiteReport::to_json() const {
    Json arr = Json::array();
    for (const auto& c : checks) {
        Json item{{"label", c.label}, {"pass", c.pass}};
        if (!c.details.is_null()) item["details"] = c.details;
        arr.push_back(std::move(item));
    }
    Json j{{"suite", suite},
           {"params", params},
           {"checks", std::move(arr)},
           {"all_pass", all_pass()}};
    j["first_failure"] = all_pass() ? Json() : Json(first_failure());
    return j;
}

namespace {

void add_check(SuiteReport& report, std::string label, bool pass, Json details = {}) {
    report.checks.push_back({std::move(label), pass, std::move(details)});
}

// Deterministic helper on top of mt19937_64: raw engine output is reduced by
// modulo so reports are reproducible across standard libraries.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    long range(long lo, long hi) {  // inclusive
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long>(engine_() % span);
    }
    Rational rational(long num_lo, long num_hi, long den_hi) {
        Rational q(range(num_lo, num_hi), range(1, den_hi));
        q.canonicalize();
        return q;
    }

  private:
    std::mt19937_64 engine_;
};

}  // namespace

SuiteReport suite_reconstruction(std::size_t n_max) {
    SuiteReport report{"reconstruction", Json{{"n_max", n_max}}, {}};
    const std::vector<BasisSpec> specs = {
        BasisSpec::monomial(),
        BasisSpec::hermite_probabilist(Rational(1)),
        BasisSpec::hermite_physicist(),
        BasisSpec::hermite_physicist_scaled(Rational(2)),
        BasisSpec::laguerre(),
        BasisSpec::chebyshev(),
        BasisSpec::legendre(),
    };
    for (const auto& spec : specs) {
        const OperatorRep rep = coefficient_polys(spec, n_max);
        BasisSequence seq(spec);
        bool ok = true;
        std::size_t first_bad = 0;
        for (std::size_t n = 0; n <= n_max; ++n) {
            const Polynomial lhs =
                apply_operator(rep, Polynomial::monomial(Rational(1), n));
            if (lhs != seq.at(n)) {
                ok = false;
                first_bad = n;
                break;
            }
        }
        add_check(report, family_name(spec.family), ok,
                  ok ? Json() : Json{{"first_failing_n", first_bad}});
    }
    return report;
}

SuiteReport suite_hermite_closed_form(std::size_t n_max) {
    SuiteReport report{"hermite-closed-form", Json{{"n_max", n_max}}, {}};
    for (const Rational& beta : {Rational(2), Rational(-2), Rational(3)}) {
        const OperatorRep rep =
            coefficient_polys(BasisSpec::hermite_physicist_scaled(beta), n_max);
        bool ok = true;
        for (std::size_t n = 0; n <= n_max && ok; ++n)
            ok = rep.q[n] == closed_form_q_hermite_scaled(n, beta);
        add_check(report, "extracted = H_n((beta-1)/2 x), beta=" + format_rational(beta), ok);
    }
    bool corollary = true;
    for (std::size_t k = 0; k <= n_max && corollary; ++k)
        corollary = closed_form_q_hermite_scaled(k, Rational(-2)) ==
                    compose_affine(closed_form_q_hermite_scaled(k, Rational(2)), Rational(-3),
                                   Rational(0));
    add_check(report, "reversed transformation: Q_k^-(x) = Q_k^+(-3x)", corollary);
    return report;
}

SuiteReport suite_laguerre_closed_form(std::size_t n_max) {
    SuiteReport report{"laguerre-closed-form", Json{{"n_max", n_max}}, {}};
    const OperatorRep rep = coefficient_polys(BasisSpec::laguerre(), n_max);
    bool ok = true;
    std::size_t first_bad = 0;
    for (std::size_t n = 0; n <= n_max; ++n)
        if (rep.q[n] != closed_form_q_laguerre(n)) {
            ok = false;
            first_bad = n;
            break;
        }
    add_check(report, "extracted = closed form", ok,
              ok ? Json() : Json{{"first_failing_n", first_bad}});
    add_check(report, "Q_1 = 1 - 2x",
              rep.q.size() > 1 && rep.q[1] == Polynomial({Rational(1), Rational(-2)}));
    return report;
}

SuiteReport suite_ddq(std::size_t n_max, std::size_t binom_n_max) {
    SuiteReport report{"ddq", Json{{"n_max", n_max}, {"binomial_n_max", binom_n_max}}, {}};
    for (std::size_t n = 0; n <= n_max; ++n)
        add_check(report, "n=" + std::to_string(n), verify_laguerre_ddq(n));

    bool id_a = true, id_b = true, id_c = true;
    const auto b = [](long n, long k) { return Rational(binomial(n, k)); };
    for (long n = 0; n <= static_cast<long>(binom_n_max); ++n)
        for (long r = 0; r <= n; ++r)
            for (long l = 0; l <= r; ++l) {
                const Rational base = b(n + 1, r) * b(r, l);
                id_a = id_a && b(n, r) * b(r, l) == make_rational(n - r + 1, n + 1) * base;
                id_b = id_b && b(n, r - 1) * b(r - 1, l) == make_rational(r - l, n + 1) * base;
                id_c = id_c && b(n, r - 2) * b(r - 2, l) ==
                                   make_rational((r - l) * (r - l - 1), (n + 1) * (n - r + 2)) * base;
            }
    add_check(report, "binomial identity (n,r)(r,l)", id_a);
    add_check(report, "binomial identity (n,r-1)(r-1,l)", id_b);
    add_check(report, "binomial identity (n,r-2)(r-2,l)", id_c);
    return report;
}

namespace {

SuiteReport interlacing_suite(std::string name, std::vector<Polynomial> members, Json params,
                              bool check_unit_interval) {
    SuiteReport report{std::move(name), std::move(params), {}};
    InterlacingOptions opts;
    if (check_unit_interval) opts.interval = {Rational(0), Rational(1)};
    const InterlacingReport result = interlacing_report(members, opts);
    bool simple_counts = true;
    for (std::size_t n = 0; n < members.size(); ++n)
        simple_counts = simple_counts && has_simple_real_roots(members[n]) &&
                        result.witness_intervals[n].size() == n;
    add_check(report, "every Q_n has n simple real roots", simple_counts);
    add_check(report, "consecutive Q's strictly interlace", result.strictly_interlacing,
              interlacing_report_to_json(result));
    if (check_unit_interval)
        add_check(report, "all roots lie in (0,1)", result.all_in_unit_interval);
    return report;
}

}  // namespace

SuiteReport suite_interlacing_laguerre(std::size_t n_max) {
    std::vector<Polynomial> members;
    for (std::size_t n = 0; n <= n_max + 1; ++n) members.push_back(closed_form_q_laguerre(n));
    return interlacing_suite("interlacing-laguerre", std::move(members),
                             Json{{"n_max", n_max}, {"interval", {"0/1", "1/1"}}}, true);
}

SuiteReport suite_interlacing_hermite(std::size_t n_max, const Rational& beta) {
    std::vector<Polynomial> members;
    for (std::size_t n = 0; n <= n_max + 1; ++n)
        members.push_back(closed_form_q_hermite_scaled(n, beta));
    return interlacing_suite("interlacing-hermite", std::move(members),
                             Json{{"n_max", n_max}, {"beta", format_rational(beta)}}, false);
}

SuiteReport suite_genfun(std::size_t order) {
    SuiteReport report{"genfun", Json{{"order", order}}, {}};
    const TruncatedBivariateSeries lag = laguerre_generating(order);
    BasisSequence laguerre(BasisSpec::laguerre());
    bool l_ok = true;
    for (std::size_t n = 0; n <= order && l_ok; ++n) l_ok = lag.coeff(n) == laguerre.at(n);
    add_check(report, "exp(wx/(w-1))/(1-w) coefficients are L_n", l_ok);

    const TruncatedBivariateSeries gen_q = laguerre_q_generating(order);
    bool q_ok = true;
    for (std::size_t n = 0; n <= order && q_ok; ++n)
        q_ok = gen_q.coeff(n) == closed_form_q_laguerre(n);
    add_check(report, "exp(-wx/(w(x-1)+1))/(w(x-1)+1) coefficients are Q_n", q_ok);

    add_check(report, "PDE residual vanishes through order " + std::to_string(order - 1),
              pde_residual(gen_q).is_zero());
    return report;
}

SuiteReport suite_legendre(std::size_t q_n_max, long c_k_max, long dk_n_max) {
    SuiteReport report{"legendre",
                       Json{{"q_n_max", q_n_max}, {"c_k_max", c_k_max}, {"dk_n_max", dk_n_max}},
                       {}};
    const OperatorRep rep = coefficient_polys(BasisSpec::legendre(), q_n_max);
    bool q_ok = true;
    for (std::size_t n = 0; n <= q_n_max && q_ok; ++n)
        q_ok = rep.q[n] == closed_form_q_legendre(n);
    add_check(report, "extracted Q_2k = (2k-1)!!/(2k)!! (x^2-1)^k, odd zero", q_ok);

    bool c_ok = true;
    for (long k = 0; k <= c_k_max && c_ok; ++k)
        for (long l = 0; l <= k / 2 && c_ok; ++l)
            c_ok = legendre_c(k, l, CTableMode::recursion) ==
                   legendre_c(k, l, CTableMode::closed_form);
    add_check(report, "C-table recursion = closed form", c_ok);

    bool dk_ok = true;
    for (long n = 0; n <= dk_n_max && dk_ok; ++n) {
        Polynomial direct = poly_pow(Polynomial({Rational(-1), Rational(0), Rational(1)}),
                                     static_cast<unsigned long>(n));
        for (long k = 0; k <= n && dk_ok; ++k) {
            dk_ok = legendre_derivative_expansion(n, k) == direct;
            direct = derivative(direct);
        }
    }
    add_check(report, "D^k[(x^2-1)^n] expansion = direct differentiation", dk_ok);
    return report;
}

SuiteReport suite_chebyshev(std::size_t k_max) {
    SuiteReport report{"chebyshev", Json{{"k_max", k_max}}, {}};
    const OperatorRep rep = coefficient_polys(BasisSpec::chebyshev(), 2 * k_max + 1);
    bool ok = true;
    for (std::size_t n = 0; n < rep.q.size() && ok; ++n)
        ok = rep.q[n] == closed_form_q_chebyshev(n);
    add_check(report, "extracted Q_2k = (x^2-1)^k, odd zero", ok);
    return report;
}

SuiteReport suite_classification(std::size_t count, std::uint64_t seed, std::size_t n_max) {
    SuiteReport report{"classification",
                       Json{{"count", count}, {"seed", seed}, {"n_max", n_max}}, {}};
    Rng rng(seed);
    for (std::size_t trial = 0; trial < count; ++trial) {
        const Rational beta = rng.rational(-24, 24, 8);
        Rational alpha = rng.rational(1, 32, 8);  // strictly positive

        // gamma_k = k! a_k from the series of exp(-(alpha/2) z^2 - beta z):
        // (k+1) a_(k+1) = -beta a_k - alpha a_(k-1)
        std::vector<Rational> a{Rational(1)};
        for (std::size_t k = 0; k < n_max; ++k) {
            Rational next = -beta * a[k];
            if (k >= 1) next -= alpha * a[k - 1];
            a.push_back(next / Rational(static_cast<long>(k) + 1));
        }
        std::vector<Rational> gammas(a.size());
        Rational fact(1);
        for (std::size_t k = 0; k < a.size(); ++k) {
            if (k > 0) fact *= Rational(static_cast<long>(k));
            gammas[k] = fact * a[k];
        }

        const ClassificationReport result = classify_constant_coefficient_operator(gammas);
        const bool pass = result.beta == beta && result.alpha == alpha && result.all_verified() &&
                          result.is_real_ops;
        add_check(report, "trial " + std::to_string(trial), pass,
                  Json{{"beta", format_rational(beta)}, {"alpha", format_rational(alpha)}});
    }

    // alpha = (gamma_1^2 - gamma_0 gamma_2)/gamma_0^2 = -1 here
    const ClassificationReport rejected =
        classify_constant_coefficient_operator({Rational(1), Rational(0), Rational(1)});
    add_check(report, "alpha <= 0 flagged as not a real OPS",
              !rejected.is_real_ops && rejected.alpha == Rational(-1) && !rejected.all_verified(),
              classification_report_to_json(rejected));
    return report;
}

SuiteReport suite_stability() {
    SuiteReport report{"stability", Json::object(), {}};
    const auto expect = [&](const BasisSpec& spec, Orientation want, const std::string& name) {
        const StabilityVerdict verdict = stability_orientation(spec);
        add_check(report, name + " is " + orientation_name(want),
                  verdict.orientation == want, stability_verdict_to_json(verdict));
    };
    expect(BasisSpec::hermite_physicist(), Orientation::preserving, "hermite-phys");
    expect(BasisSpec::hermite_physicist_scaled(Rational(-2)), Orientation::reversing,
           "hermite-phys-scaled(-2)");
    expect(BasisSpec::laguerre(), Orientation::reversing, "laguerre");
    expect(BasisSpec::monomial(), Orientation::preserving, "monomial");
    return report;
}

SuiteReport suite_disk_image(std::size_t count, std::uint64_t seed, std::size_t max_degree,
                             Family family) {
    SuiteReport report{"disk-image",
                       Json{{"count", count},
                            {"seed", seed},
                            {"max_degree", max_degree},
                            {"family", family_name(family)}},
                       {}};
    const bool allow_complex_pairs = family == Family::chebyshev;
    Rng rng(seed);
    for (std::size_t trial = 0; trial < count; ++trial) {
        const long degree = rng.range(1, static_cast<long>(max_degree));
        Polynomial poly = Polynomial::constant(Rational(1));
        Json factors = Json::array();
        long remaining = degree;
        while (remaining > 0) {
            if (allow_complex_pairs && remaining >= 2 && rng.range(0, 1) == 1) {
                // conjugate pair re +/- i*im with re^2 + im^2 < 1
                Rational re, im;
                do {
                    re = Rational(rng.range(-12, 12), 16);
                    im = Rational(rng.range(1, 12), 16);
                    re.canonicalize();
                    im.canonicalize();
                } while (re * re + im * im >= 1);
                poly *= Polynomial({re * re + im * im, -2 * re, Rational(1)});
                factors.push_back(Json{{"conjugate_pair",
                                        {{"re", format_rational(re)},
                                         {"im", format_rational(im)}}}});
                remaining -= 2;
            } else {
                Rational root(rng.range(-15, 15), 16);
                root.canonicalize();
                poly *= Polynomial({-root, Rational(1)});
                factors.push_back(Json{{"real_root", format_rational(root)}});
                remaining -= 1;
            }
        }
        const bool pass = unit_disk_image_check(poly.coeffs(), family);
        add_check(report, "trial " + std::to_string(trial), pass, Json{{"factors", factors}});
    }
    return report;
}

}  // namespace qop
