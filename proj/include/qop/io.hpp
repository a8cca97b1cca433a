#ifndef QOP_IO_HPP
#define QOP_IO_HPP

#include <string>
#include <vector>

#include "json.hpp"
#include "qop/analysis.hpp"
#include "qop/bases.hpp"
#include "qop/diffop.hpp"
#include "qop/series.hpp"

namespace qop {

using Json = nlohmann::json;

// Polynomial wire format: array of "num/den" strings in ascending degree
// order; the zero polynomial is the empty array. Round-trips exactly.
Json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);

Json basis_spec_to_json(const BasisSpec& spec);
BasisSpec basis_spec_from_json(const Json& j);

Json operator_rep_to_json(const OperatorRep& rep);
OperatorRep operator_rep_from_json(const Json& j);

Json series_to_json(const TruncatedBivariateSeries& s);
TruncatedBivariateSeries series_from_json(const Json& j);

Json isolating_interval_to_json(const IsolatingInterval& iv);
Json classification_report_to_json(const ClassificationReport& r);
Json stability_verdict_to_json(const StabilityVerdict& v);
Json interlacing_report_to_json(const InterlacingReport& r);

std::string orientation_name(Orientation o);

/// CSV table of polynomials: header row c0..cK, one row per polynomial,
/// ragged rows padded with "0/1".
std::string polynomials_to_csv(const std::vector<Polynomial>& polys);

}  // namespace qop

#endif
