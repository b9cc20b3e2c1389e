#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "turanlab/bounds.hpp"
#include "turanlab/classes.hpp"
#include "turanlab/constructions.hpp"
#include "turanlab/levelsets.hpp"
#include "turanlab/polynomial.hpp"
#include "turanlab/search.hpp"
#include "turanlab/supnorm.hpp"

namespace turan::io {

using Json = nlohmann::json;

// {"leading": [re, im], "zeros": [[re, im], ...]}. Doubles round-trip exactly.
Json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);
Polynomial read_polynomial(const std::string& path);
void write_polynomial(const std::string& path, const Polynomial& p);

Json to_json(const ClassSpec& spec);  // {"n", "k", "pin"}
ClassSpec class_spec_from_json(const Json& j);

Json to_json(const CertifiedValue& v);
Json to_json(const BoundBracket& b);
Json to_json(const MembershipReport& m);
Json to_json(const LevelSetReport& r);
Json to_json(const DecayReport& r);
Json to_json(const Verdict& v);
Json to_json(const SearchResult& r);
Json to_json(const SweepTable& t);
Json to_json(const ConstructionReport& r);

// 17 significant digits.
std::string format_double(double x);

// Columns: n, k, ratio, err, bound_source, bound_value, pass.
void write_verdict_csv(std::ostream& os, const Verdict& v);
// Columns: n, k, ratio, err, lower_bound, upper_construction, within_bracket, restarts_used, evals.
void write_sweep_csv(std::ostream& os, const SweepTable& t);
// Columns: evaluation, best.
void write_trace_csv(std::ostream& os, const std::vector<TracePoint>& trace);

}  // namespace turan::io
