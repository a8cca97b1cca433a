// qop: exact computation and verification of the coefficient polynomials
// Q_k(x) in differential-operator representations T = sum Q_k(x)/k! D^k of
// polynomial basis transformations x^n -> P_n(x).
//
// Commands:
//   basis    emit P_0..P_n for a family in the wire format
//   coeffs   emit the extracted coefficient polynomials Q_0..Q_n
//   verify   run a named verification suite and emit a JSON report
//
// Exit codes: 0 all checks pass, 1 a mathematical check failed, 2 bad usage.
// Reports go to stdout (or --output); diagnostics go to stderr.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "qop/io.hpp"
#include "qop/suites.hpp"

namespace {

using namespace qop;

struct SpecOptions {
    std::string family = "monomial";
    std::string alpha = "1/1";
    std::string beta = "2/1";
    std::string spec_file;
};

void add_spec_options(CLI::App* cmd, SpecOptions& opts) {
    cmd->add_option("--family", opts.family,
                    "monomial | hermite-prob | hermite-phys | hermite-phys-scaled | laguerre | "
                    "chebyshev | legendre | custom");
    cmd->add_option("--alpha", opts.alpha, "parameter for hermite-prob (num/den, > 0)");
    cmd->add_option("--beta", opts.beta, "parameter for hermite-phys-scaled (num/den, != 0)");
    cmd->add_option("--spec-file", opts.spec_file,
                    "JSON basis spec file (required for custom recurrences)");
}

BasisSpec resolve_spec(const SpecOptions& opts) {
    if (!opts.spec_file.empty()) {
        std::ifstream in(opts.spec_file);
        if (!in) throw std::invalid_argument("cannot open spec file: " + opts.spec_file);
        Json j = Json::parse(in);
        return basis_spec_from_json(j);
    }
    const auto family = family_from_name(opts.family);
    if (!family) throw std::invalid_argument("unknown family: " + opts.family);
    if (*family == Family::custom)
        throw std::invalid_argument("custom family requires --spec-file");
    BasisSpec spec;
    spec.family = *family;
    spec.alpha = parse_rational(opts.alpha);
    spec.beta = parse_rational(opts.beta);
    spec.validate();
    return spec;
}

// relative --output paths land in $QOP_OUTPUT_DIR when it is set
void emit(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text;
        return;
    }
    std::filesystem::path path(output_path);
    if (path.is_relative()) {
        if (const char* dir = std::getenv("QOP_OUTPUT_DIR")) path = std::filesystem::path(dir) / path;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write output file: " + path.string());
    out << text;
}

std::string render_polys(const std::vector<Polynomial>& polys, const std::string& format) {
    if (format == "csv") return polynomials_to_csv(polys);
    Json rows = Json::array();
    for (const auto& p : polys) rows.push_back(polynomial_to_json(p));
    return rows.dump(2) + "\n";
}

int run_basis(const SpecOptions& spec_opts, std::size_t n_max, const std::string& format,
              const std::string& output_path) {
    const BasisSpec spec = resolve_spec(spec_opts);
    BasisSequence seq(spec);
    std::vector<Polynomial> rows;
    for (std::size_t n = 0; n <= n_max; ++n) rows.push_back(seq.at(n));
    emit(render_polys(rows, format), output_path);
    return 0;
}

int run_coeffs(const SpecOptions& spec_opts, std::size_t n_max, std::optional<std::size_t> order,
               bool check_closed_form, const std::string& format,
               const std::string& output_path) {
    const BasisSpec spec = resolve_spec(spec_opts);
    const std::size_t trunc = order.value_or(n_max);
    if (trunc < n_max) throw std::invalid_argument("--order must be at least --n");
    OperatorRep rep = coefficient_polys(spec, trunc);
    rep.q.resize(n_max + 1);

    if (!check_closed_form) {
        emit(render_polys(rep.q, format), output_path);
        return 0;
    }
    if (format != "json")
        throw std::invalid_argument("--check-closed-form reports are JSON only");
    if (!has_closed_form_q(spec.family))
        throw std::invalid_argument("no closed-form Q known for family " +
                                    family_name(spec.family));
    Json qs = Json::array(), agreement = Json::array();
    bool all_agree = true;
    for (std::size_t n = 0; n <= n_max; ++n) {
        const bool agrees = rep.q[n] == closed_form_q(spec.family, n, spec.beta);
        all_agree = all_agree && agrees;
        qs.push_back(polynomial_to_json(rep.q[n]));
        agreement.push_back(agrees);
    }
    Json out{{"q", std::move(qs)}, {"closed_form_agrees", std::move(agreement)},
             {"all_agree", all_agree}};
    emit(out.dump(2) + "\n", output_path);
    return all_agree ? 0 : 1;
}

struct VerifyOptions {
    std::string suite;
    SpecOptions spec;
    std::size_t n = 20;
    std::size_t order = 15;
    std::size_t count = 0;  // 0: per-suite default
    std::uint64_t seed = 20210601;
    std::string output_path;
};

int run_verify(const VerifyOptions& opts) {
    Json out;
    bool pass = false;
    const auto finish_suite = [&](const SuiteReport& report) {
        out = report.to_json();
        pass = report.all_pass();
    };
    const auto combine = [&](const std::string& name, std::vector<SuiteReport> reports) {
        pass = true;
        Json subs = Json::array();
        std::string first;
        for (const auto& r : reports) {
            if (!r.all_pass() && first.empty()) first = r.suite + ": " + r.first_failure();
            pass = pass && r.all_pass();
            subs.push_back(r.to_json());
        }
        out = Json{{"suite", name}, {"sub_reports", std::move(subs)}, {"all_pass", pass}};
        out["first_failure"] = pass ? Json() : Json(first);
    };

    if (opts.suite == "reconstruction") {
        finish_suite(suite_reconstruction(opts.n));
    } else if (opts.suite == "closed-forms") {
        combine("closed-forms",
                {suite_hermite_closed_form(opts.n), suite_laguerre_closed_form(opts.n),
                 suite_chebyshev(opts.n / 2),
                 suite_legendre(opts.n, 2 * static_cast<long>(opts.n),
                                std::min<long>(static_cast<long>(opts.n), 10))});
    } else if (opts.suite == "interlacing") {
        const auto family = family_from_name(opts.spec.family);
        if (family == Family::hermite_physicist || family == Family::hermite_physicist_scaled) {
            const Rational beta = family == Family::hermite_physicist
                                      ? Rational(2)
                                      : parse_rational(opts.spec.beta);
            finish_suite(suite_interlacing_hermite(opts.n, beta));
        } else if (!family || family == Family::laguerre || opts.spec.family == "monomial") {
            finish_suite(suite_interlacing_laguerre(opts.n));
        } else {
            throw std::invalid_argument("interlacing suite supports laguerre and hermite-phys[-scaled]");
        }
    } else if (opts.suite == "ddq") {
        finish_suite(suite_ddq(opts.n, 25));
    } else if (opts.suite == "genfun") {
        finish_suite(suite_genfun(opts.order));
    } else if (opts.suite == "classification") {
        finish_suite(suite_classification(opts.count ? opts.count : 50, opts.seed,
                                          std::min<std::size_t>(opts.n, 12)));
    } else if (opts.suite == "stability") {
        if (!opts.spec.family.empty() && opts.spec.family != "monomial") {
            const StabilityVerdict verdict = stability_orientation(resolve_spec(opts.spec));
            emit(stability_verdict_to_json(verdict).dump(2) + "\n", opts.output_path);
            return 0;
        }
        finish_suite(suite_stability());
    } else if (opts.suite == "disk-image") {
        const std::size_t count = opts.count ? opts.count : 100;
        const auto family = family_from_name(opts.spec.family);
        if (family == Family::chebyshev || family == Family::legendre)
            finish_suite(suite_disk_image(count, opts.seed, 8, *family));
        else
            combine("disk-image",
                    {suite_disk_image(count, opts.seed, 8, Family::chebyshev),
                     suite_disk_image(count, opts.seed, 8, Family::legendre)});
    } else {
        throw std::invalid_argument("unknown suite: " + opts.suite);
    }
    emit(out.dump(2) + "\n", opts.output_path);
    return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for coefficient polynomials of polynomial basis transformations"};
    app.require_subcommand(1);

    SpecOptions basis_spec;
    std::size_t basis_n = 10;
    std::string basis_format = "json", basis_output;
    CLI::App* basis = app.add_subcommand("basis", "emit P_0..P_n for a basis family");
    add_spec_options(basis, basis_spec);
    basis->add_option("--n", basis_n, "largest degree to emit");
    basis->add_option("--format", basis_format)->check(CLI::IsMember({"json", "csv"}));
    basis->add_option("--output", basis_output, "output file (default stdout)");

    SpecOptions coeffs_spec;
    std::size_t coeffs_n = 10;
    std::optional<std::size_t> coeffs_order;
    bool check_closed_form = false;
    std::string coeffs_format = "json", coeffs_output;
    CLI::App* coeffs = app.add_subcommand("coeffs", "emit extracted Q_0..Q_n");
    add_spec_options(coeffs, coeffs_spec);
    coeffs->add_option("--n", coeffs_n, "largest Q index to emit");
    coeffs->add_option("--order", coeffs_order, "truncation order (default --n)");
    coeffs->add_flag("--check-closed-form", check_closed_form,
                     "also compare each Q_n against the family's closed form");
    coeffs->add_option("--format", coeffs_format)->check(CLI::IsMember({"json", "csv"}));
    coeffs->add_option("--output", coeffs_output, "output file (default stdout)");

    VerifyOptions verify_opts;
    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify
        ->add_option("--suite", verify_opts.suite,
                     "reconstruction | closed-forms | interlacing | ddq | genfun | "
                     "classification | stability | disk-image")
        ->required();
    add_spec_options(verify, verify_opts.spec);
    verify->add_option("--n", verify_opts.n, "sweep bound n_max");
    verify->add_option("--order", verify_opts.order, "series truncation order");
    verify->add_option("--count", verify_opts.count, "number of randomized trials");
    verify->add_option("--seed", verify_opts.seed, "seed for randomized suites");
    verify->add_option("--output", verify_opts.output_path, "output file (default stdout)");

    // stability/interlacing treat an explicitly chosen family specially
    verify->get_option("--family")->default_str("");
    verify_opts.spec.family.clear();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (basis->parsed()) return run_basis(basis_spec, basis_n, basis_format, basis_output);
        if (coeffs->parsed())
            return run_coeffs(coeffs_spec, coeffs_n, coeffs_order, check_closed_form,
                              coeffs_format, coeffs_output);
        return run_verify(verify_opts);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
