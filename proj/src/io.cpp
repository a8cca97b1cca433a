#include "qop/io.hpp"

#include <sstream>
#include <stdexcept>

namespace qop {

Json polynomial_to_json(const Polynomial& p) {
    Json arr = Json::array();
    for (const auto& c : p.coeffs()) arr.push_back(format_rational(c));
    return arr;
}

Polynomial polynomial_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("polynomial wire value must be an array");
    std::vector<Rational> coeffs;
    coeffs.reserve(j.size());
    for (const auto& item : j) coeffs.push_back(parse_rational(item.get<std::string>()));
    return Polynomial(std::move(coeffs));
}

Json basis_spec_to_json(const BasisSpec& spec) {
    Json j;
    j["family"] = family_name(spec.family);
    if (spec.family == Family::hermite_probabilist) j["alpha"] = format_rational(spec.alpha);
    if (spec.family == Family::hermite_physicist_scaled) j["beta"] = format_rational(spec.beta);
    if (spec.recurrence) {
        Json rec;
        rec["c"] = Json::array();
        for (const auto& v : spec.recurrence->c) rec["c"].push_back(format_rational(v));
        rec["lambda"] = Json::array();
        for (const auto& v : spec.recurrence->lambda) rec["lambda"].push_back(format_rational(v));
        rec["p0"] = format_rational(spec.recurrence->p0);
        j["recurrence"] = std::move(rec);
    }
    return j;
}

BasisSpec basis_spec_from_json(const Json& j) {
    const auto family = family_from_name(j.at("family").get<std::string>());
    if (!family) throw std::invalid_argument("unknown family '" + j.at("family").dump() + "'");
    BasisSpec spec;
    spec.family = *family;
    if (j.contains("alpha")) spec.alpha = parse_rational(j.at("alpha").get<std::string>());
    if (j.contains("beta")) spec.beta = parse_rational(j.at("beta").get<std::string>());
    if (j.contains("recurrence")) {
        const Json& rec = j.at("recurrence");
        ThreeTermRecurrence ttr;
        for (const auto& v : rec.at("c")) ttr.c.push_back(parse_rational(v.get<std::string>()));
        for (const auto& v : rec.at("lambda"))
            ttr.lambda.push_back(parse_rational(v.get<std::string>()));
        ttr.p0 = parse_rational(rec.at("p0").get<std::string>());
        spec.recurrence = std::move(ttr);
    }
    spec.validate();
    return spec;
}

Json operator_rep_to_json(const OperatorRep& rep) {
    Json j;
    j["truncation_order"] = rep.truncation_order();
    Json q = Json::array();
    for (const auto& poly : rep.q) q.push_back(polynomial_to_json(poly));
    j["q"] = std::move(q);
    return j;
}

OperatorRep operator_rep_from_json(const Json& j) {
    OperatorRep rep;
    for (const auto& poly : j.at("q")) rep.q.push_back(polynomial_from_json(poly));
    if (rep.q.empty()) throw std::invalid_argument("operator rep must contain Q_0");
    if (j.at("truncation_order").get<std::size_t>() != rep.truncation_order())
        throw std::invalid_argument("operator rep truncation_order does not match q length");
    return rep;
}

Json series_to_json(const TruncatedBivariateSeries& s) {
    Json j;
    j["order"] = s.order();
    Json coeffs = Json::array();
    for (const auto& poly : s.coeffs()) coeffs.push_back(polynomial_to_json(poly));
    j["coeffs"] = std::move(coeffs);
    return j;
}

TruncatedBivariateSeries series_from_json(const Json& j) {
    std::vector<Polynomial> coeffs;
    for (const auto& poly : j.at("coeffs")) coeffs.push_back(polynomial_from_json(poly));
    const auto order = j.at("order").get<std::size_t>();
    if (coeffs.size() != order + 1)
        throw std::invalid_argument("series coeff count does not match order");
    return TruncatedBivariateSeries(order, std::move(coeffs));
}

Json isolating_interval_to_json(const IsolatingInterval& iv) {
    return Json{{"lo", format_rational(iv.lo)},
                {"hi", format_rational(iv.hi)},
                {"multiplicity", iv.multiplicity}};
}

Json classification_report_to_json(const ClassificationReport& r) {
    Json conditions = Json::array();
    if (r.const_coeffs) conditions.push_back("const_coeffs");
    if (r.appell) conditions.push_back("appell");
    if (r.recurrence) conditions.push_back("recurrence");
    if (r.hermite_shift) conditions.push_back("hermite_shift");
    return Json{{"is_appell", r.is_appell},
                {"gamma0", format_rational(r.gamma0)},
                {"beta", format_rational(r.beta)},
                {"alpha", format_rational(r.alpha)},
                {"conditions_verified", std::move(conditions)},
                {"is_real_ops", r.is_real_ops},
                {"n_max", r.n_max}};
}

std::string orientation_name(Orientation o) {
    switch (o) {
        case Orientation::preserving: return "preserving";
        case Orientation::reversing: return "reversing";
        case Orientation::indeterminate: return "indeterminate";
    }
    return "indeterminate";
}

Json stability_verdict_to_json(const StabilityVerdict& v) {
    return Json{{"orientation", orientation_name(v.orientation)},
                {"witness_root",
                 {{"re", format_rational(v.witness_root.re)},
                  {"im", format_rational(v.witness_root.im)}}}};
}

Json interlacing_report_to_json(const InterlacingReport& r) {
    Json witnesses = Json::array();
    for (const auto& member : r.witness_intervals) {
        Json list = Json::array();
        for (const auto& iv : member) list.push_back(isolating_interval_to_json(iv));
        witnesses.push_back(std::move(list));
    }
    return Json{{"n_checked", r.n_checked},
                {"all_real", r.all_real},
                {"all_in_unit_interval", r.all_in_unit_interval},
                {"strictly_interlacing", r.strictly_interlacing},
                {"zero_members_skipped", r.zero_members_skipped},
                {"witness_intervals", std::move(witnesses)}};
}

std::string polynomials_to_csv(const std::vector<Polynomial>& polys) {
    std::size_t width = 1;
    for (const auto& p : polys) width = std::max(width, p.coeffs().size());
    std::ostringstream out;
    for (std::size_t i = 0; i < width; ++i) out << (i ? "," : "") << "c" << i;
    out << "\n";
    for (const auto& p : polys) {
        for (std::size_t i = 0; i < width; ++i) {
            if (i) out << ",";
            out << (i < p.coeffs().size() ? format_rational(p.coeffs()[i]) : "0/1");
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace qop
