#include "turanlab/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>

#include "turanlab/errors.hpp"
#include "turanlab/roots.hpp"

namespace turan::io {

namespace {

Json pair_of(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_of(const Json& j, const char* what) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw InvalidArgument(std::string("polynomial JSON: ") + what + " must be [re, im]");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

Json optional_number(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

Json interval_list(const std::vector<Interval>& v) {
    Json out = Json::array();
    for (const auto& i : v) out.push_back(Json::array({i.lo, i.hi}));
    return out;
}

}  // namespace

Json to_json(const Polynomial& p) {
    if (p.is_zero()) return Json{{"leading", pair_of({0.0, 0.0})}, {"zeros", Json::array()}};
    Json zeros = Json::array();
    if (p.is_factored()) {
        for (const auto& z : p.zeros()) zeros.push_back(pair_of(z));
        return Json{{"leading", pair_of(p.leading())}, {"zeros", zeros}};
    }
    const auto c = p.coefficients();
    for (const auto& z : polynomial_roots(c)) zeros.push_back(pair_of(z));
    return Json{{"leading", pair_of(c.back())}, {"zeros", zeros}};
}

Polynomial polynomial_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("leading") || !j.contains("zeros")) {
        throw InvalidArgument("polynomial JSON: expected an object with \"leading\" and \"zeros\"");
    }
    const Complex lead = complex_of(j.at("leading"), "leading");
    const auto& zj = j.at("zeros");
    if (!zj.is_array()) throw InvalidArgument("polynomial JSON: zeros must be an array");
    std::vector<Complex> zeros;
    for (const auto& z : zj) zeros.push_back(complex_of(z, "each zero"));
    if (lead == Complex{0.0, 0.0} && zeros.empty()) return Polynomial::zero();
    return Polynomial::from_zeros(lead, std::move(zeros));
}

Polynomial read_polynomial(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open polynomial file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const Json::parse_error& e) {
        throw InvalidArgument("polynomial file " + path + " is not valid JSON: " + e.what());
    }
    return polynomial_from_json(j);
}

void write_polynomial(const std::string& path, const Polynomial& p) {
    std::ofstream out(path);
    if (!out) throw InvalidArgument("cannot write polynomial file: " + path);
    out << to_json(p).dump() << '\n';
}

Json to_json(const ClassSpec& spec) { return Json{{"n", spec.n}, {"k", spec.k}, {"pin", spec.pin_interval_zero}}; }

ClassSpec class_spec_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("k")) throw InvalidArgument("class JSON needs n and k");
    return ClassSpec(j.at("n").get<int>(), j.at("k").get<int>(), j.value("pin", false));
}

Json to_json(const CertifiedValue& v) {
    Json j{{"value", v.value}, {"err", v.err}, {"method", to_string(v.method)}};
    j["argmax"] = std::isnan(v.argmax) ? Json(nullptr) : Json(v.argmax);
    return j;
}

Json to_json(const BoundBracket& b) {
    return Json{{"lower", b.lower}, {"upper", optional_number(b.upper)}, {"source", to_string(b.source)}};
}

Json to_json(const MembershipReport& m) {
    Json j{{"member", m.member}, {"counted", m.counted}, {"reason", m.reason}};
    j["interval_zero"] = m.interval_zero ? Json(*m.interval_zero) : Json(nullptr);
    return j;
}

Json to_json(const LevelSetReport& r) {
    return Json{{"measure", r.measure.value},
                {"err", r.measure.err},
                {"bound", r.bound},
                {"parameter", r.parameter},
                {"satisfied", r.satisfied},
                {"strict", r.strict},
                {"ambient", Json::array({r.ambient.lo, r.ambient.hi})},
                {"intervals", interval_list(r.intervals)}};
}

Json to_json(const DecayReport& r) {
    return Json{{"status", to_string(r.status)},
                {"max_violation", r.max_violation},
                {"window", Json::array({r.window.lo, r.window.hi})},
                {"restricted_sup", r.restricted_sup},
                {"full_sup", r.full_sup}};
}

Json to_json(const Verdict& v) {
    Json checks = Json::array();
    for (const auto& c : v.checks) {
        Json cj = to_json(c.bracket);
        cj["pass"] = c.pass;
        checks.push_back(cj);
    }
    return Json{{"n", v.n}, {"k", v.k}, {"ratio", to_json(v.ratio)}, {"checks", checks}, {"all_pass", v.all_pass()}};
}

Json to_json(const SearchResult& r) {
    Json trace = Json::array();
    for (const auto& t : r.trace) trace.push_back(Json::array({t.evaluation, t.best}));
    return Json{{"ratio", r.ratio.value},
                {"err", r.ratio.err},
                {"cached_ratio", r.cached_ratio},
                {"bracket", to_json(r.bracket)},
                {"within_bracket", r.within_bracket},
                {"restarts_used", r.restarts_used},
                {"evaluations", r.evaluations},
                {"origin", r.origin},
                {"params", r.params},
                {"best", to_json(r.best)},
                {"trace", trace}};
}

Json to_json(const SweepTable& t) {
    Json cells = Json::array();
    for (const auto& c : t.cells) {
        Json cj{{"n", c.n}, {"k", c.k}, {"ok", c.ok}, {"lower_bound", c.lower_bound},
                {"upper_construction", optional_number(c.upper_construction)}};
        if (c.ok) {
            cj["ratio"] = c.result->ratio.value;
            cj["err"] = c.result->ratio.err;
            cj["within_bracket"] = c.result->within_bracket;
            cj["restarts_used"] = c.result->restarts_used;
            cj["evals"] = c.result->evaluations;
            cj["best"] = to_json(c.result->best);
        } else {
            cj["error"] = c.error;
        }
        cells.push_back(cj);
    }
    Json tk = Json::array(), tn = Json::array(), viol = Json::array();
    for (const auto& [n, tr] : t.trend_in_k) tk.push_back(Json{{"n", n}, {"trend", to_string(tr)}});
    for (const auto& [k, tr] : t.trend_in_n) tn.push_back(Json{{"k", k}, {"trend", to_string(tr)}});
    for (const auto& [n, k] : t.k_monotonicity_violations) viol.push_back(Json::array({n, k}));
    return Json{{"cells", cells},
                {"slope", optional_number(t.slope)},
                {"trend_in_k", tk},
                {"trend_in_n", tn},
                {"k_monotonicity_violations", viol}};
}

Json to_json(const ConstructionReport& r) {
    Json inter = Json::object();
    for (const auto& [name, p] : r.intermediate) inter[name] = to_json(p);
    Json j{{"name", r.name},
           {"P", to_json(r.p)},
           {"intermediate", inter},
           {"ratio", to_json(r.ratio)},
           {"predicted_bound", r.predicted_bound},
           {"claims_upper_bound", r.claims_upper_bound},
           {"class", to_json(r.advertised_class)},
           {"class_check", to_json(r.class_check)}};
    if (r.maximizer) j["maximizer"] = *r.maximizer;
    if (r.confinement_radius) j["confinement_radius"] = *r.confinement_radius;
    if (r.confinement) j["confinement"] = to_string(*r.confinement);
    if (r.inner_degree) j["inner_degree"] = *r.inner_degree;
    if (r.norm_identity_gap) j["norm_identity_gap"] = *r.norm_identity_gap;
    if (r.norm_identity_err) j["norm_identity_err"] = *r.norm_identity_err;
    if (r.derivative_identity_gap) j["derivative_identity_gap"] = *r.derivative_identity_gap;
    if (r.m) j["m"] = *r.m;
    if (r.predicted_maximizer) j["predicted_maximizer"] = *r.predicted_maximizer;
    if (r.norm) j["norm"] = *r.norm;
    if (r.turan_bound) j["turan_bound"] = *r.turan_bound;
    if (r.sharpness) j["sharpness"] = *r.sharpness;
    return j;
}

std::string format_double(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void write_verdict_csv(std::ostream& os, const Verdict& v) {
    os << "n,k,ratio,err,bound_source,bound_value,pass\n";
    for (const auto& c : v.checks) {
        os << v.n << ',' << v.k << ',' << format_double(v.ratio.value) << ',' << format_double(v.ratio.err) << ','
           << to_string(c.bracket.source) << ',' << format_double(c.bracket.lower) << ','
           << (c.pass ? "true" : "false") << '\n';
    }
}

void write_sweep_csv(std::ostream& os, const SweepTable& t) {
    os << "n,k,ratio,err,lower_bound,upper_construction,within_bracket,restarts_used,evals\n";
    for (const auto& c : t.cells) {
        os << c.n << ',' << c.k << ',';
        if (c.ok) {
            os << format_double(c.result->ratio.value) << ',' << format_double(c.result->ratio.err) << ',';
        } else {
            os << ",,";
        }
        os << format_double(c.lower_bound) << ',';
        if (c.upper_construction) os << format_double(*c.upper_construction);
        os << ',';
        if (c.ok) {
            os << (c.result->within_bracket ? "true" : "false") << ',' << c.result->restarts_used << ','
               << c.result->evaluations;
        } else {
            os << ",,";
        }
        os << '\n';
    }
}

void write_trace_csv(std::ostream& os, const std::vector<TracePoint>& trace) {
    os << "evaluation,best\n";
    for (const auto& t : trace) os << t.evaluation << ',' << format_double(t.best) << '\n';
}

}  // namespace turan::io
