#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "turanlab/bounds.hpp"
#include "turanlab/classes.hpp"
#include "turanlab/constructions.hpp"
#include "turanlab/errors.hpp"
#include "turanlab/io.hpp"
#include "turanlab/levelsets.hpp"
#include "turanlab/search.hpp"
#include "turanlab/supnorm.hpp"

namespace py = pybind11;
using namespace turan;

namespace {

// Reports cross into Python as plain dicts, via the JSON serializers.
py::object to_py(const io::Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

template <class T>
py::object report(const T& value) {
    return to_py(io::to_json(value));
}

SearchConfig make_config(long budget, int restarts, std::uint64_t seed) {
    SearchConfig cfg;
    cfg.budget = budget;
    cfg.restarts = restarts;
    cfg.seed = seed;
    return cfg;
}

IncompleteObjective objective_from(const std::string& name) {
    if (name == "value-at-one") return IncompleteObjective::value_at_one;
    if (name == "total-variation") return IncompleteObjective::total_variation;
    if (name == "sup-norm") return IncompleteObjective::sup_norm;
    throw InvalidArgument("unknown objective: " + name);
}

}  // namespace

PYBIND11_MODULE(_turanlab, m) {
    m.doc() = "Reverse Markov inequalities for polynomials with restricted zeros";

    auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<InvalidArgument>(m, "InvalidArgument", base.ptr());
    py::register_exception<InvalidConstruction>(m, "InvalidConstruction", base.ptr());
    py::register_exception<UnsupportedDegree>(m, "UnsupportedDegree", base.ptr());
    py::register_exception<NumericOverflow>(m, "NumericOverflow", base.ptr());
    py::register_exception<PreconditionViolation>(m, "PreconditionViolation", base.ptr());
    py::register_exception<OutOfRegime>(m, "OutOfRegime", base.ptr());
    py::register_exception<SearchFailure>(m, "SearchFailure", base.ptr());

    py::class_<Interval>(m, "Interval")
        .def(py::init<>())
        .def(py::init<double, double>(), py::arg("lo"), py::arg("hi"))
        .def_readonly("lo", &Interval::lo)
        .def_readonly("hi", &Interval::hi)
        .def("__repr__", [](const Interval& i) {
            return "Interval(" + io::format_double(i.lo) + ", " + io::format_double(i.hi) + ")";
        });

    py::class_<Polynomial>(m, "Polynomial")
        .def(py::init([](Complex leading, std::vector<Complex> zeros) {
                 return Polynomial::from_zeros(leading, std::move(zeros));
             }),
             py::arg("leading"), py::arg("zeros"))
        .def_static("zero", &Polynomial::zero)
        .def_static("from_coefficients", &Polynomial::from_coefficients, py::arg("coeffs"))
        .def_property_readonly("degree", &Polynomial::degree)
        .def_property_readonly("leading", &Polynomial::leading)
        .def_property_readonly("zeros",
                               [](const Polynomial& p) { return std::vector<Complex>(p.zeros().begin(), p.zeros().end()); })
        .def_property_readonly("is_zero", &Polynomial::is_zero)
        .def_property_readonly("is_factored", &Polynomial::is_factored)
        .def("__call__", [](const Polynomial& p, Complex x) { return p(x); })
        .def("coefficients", &Polynomial::coefficients)
        .def("derivative", [](const Polynomial& p) { return derivative(p); })
        .def("to_json", [](const Polynomial& p) { return io::to_json(p).dump(); })
        .def_static("from_json", [](const std::string& s) { return io::polynomial_from_json(io::Json::parse(s)); });

    py::class_<CertifiedValue>(m, "CertifiedValue")
        .def_readonly("value", &CertifiedValue::value)
        .def_readonly("err", &CertifiedValue::err)
        .def_readonly("argmax", &CertifiedValue::argmax)
        .def_property_readonly("method", [](const CertifiedValue& v) { return to_string(v.method); })
        .def("__repr__", [](const CertifiedValue& v) {
            return "CertifiedValue(" + io::format_double(v.value) + " +- " + io::format_double(v.err) + ")";
        });

    py::class_<ClassSpec>(m, "ClassSpec")
        .def(py::init<int, int, bool, double>(), py::arg("n"), py::arg("k"), py::arg("pin") = false,
             py::arg("geom_tol") = 1e-9)
        .def_readonly("n", &ClassSpec::n)
        .def_readonly("k", &ClassSpec::k)
        .def_readonly("pin", &ClassSpec::pin_interval_zero);

    m.def("sup_norm", py::overload_cast<const Polynomial&, const Interval&, double>(&sup_norm), py::arg("p"),
          py::arg("interval") = Interval{}, py::arg("tol") = 1e-12);
    m.def("total_variation", &total_variation, py::arg("p"), py::arg("interval") = Interval{});
    m.def("turan_ratio", &turan_ratio, py::arg("p"), py::arg("interval") = Interval{}, py::arg("tol") = 1e-12);

    m.def("is_member", [](const Polynomial& p, const ClassSpec& s) { return report(is_member(p, s)); });
    m.def("sample", &sample, py::arg("spec"), py::arg("seed") = 0);
    m.def("embed", [](const std::vector<double>& x, const ClassSpec& s) { return embed(x, s); });

    m.def("komarov_constant", &komarov_constant);
    m.def("turan_lower", &turan_lower);
    m.def("thm22_lower", &thm22_lower);
    m.def("cor23_lower", &cor23_lower);
    m.def("thm21_bracket",
          [](int n, int k, std::optional<double> c1, std::optional<double> c2) {
              return report(thm21_bracket(n, k, c1, c2));
          },
          py::arg("n"), py::arg("k"), py::arg("c1") = py::none(), py::arg("c2") = py::none());
    m.def("lemma34_bracket", [](int n, int k, double c4) { return report(lemma34_bracket(n, k, c4)); }, py::arg("n"),
          py::arg("k"), py::arg("c4") = 1.0);
    m.def("evaluate_verdict", [](const Polynomial& p, const ClassSpec& s) { return report(evaluate_verdict(p, s)); });

    m.def("small_logderiv_measure",
          [](const Polynomial& q, double delta, const Interval& iv) { return report(small_logderiv_measure(q, delta, iv)); },
          py::arg("q"), py::arg("delta"), py::arg("ambient") = Interval{});
    m.def("large_logderiv_measure",
          [](const Polynomial& r, double alpha, const Interval& iv) { return report(large_logderiv_measure(r, alpha, iv)); },
          py::arg("r"), py::arg("alpha"), py::arg("ambient") = Interval{});
    m.def("incomplete_decay_check", [](const Polynomial& s, int n, int k) { return report(incomplete_decay_check(s, n, k)); });
    m.def("flipped_decay_check", [](const Polynomial& w, int n, int k) { return report(flipped_decay_check(w, n, k)); });

    m.def("minimize_ratio",
          [](const ClassSpec& s, long budget, int restarts, std::uint64_t seed) {
              py::gil_scoped_release release;
              auto r = minimize_ratio(s, make_config(budget, restarts, seed));
              py::gil_scoped_acquire acquire;
              return report(r);
          },
          py::arg("spec"), py::arg("budget") = 20000, py::arg("restarts") = 32, py::arg("seed") = 0);
    m.def("minimize_incomplete_ratio",
          [](int n, int k, const std::string& objective, long budget, int restarts, std::uint64_t seed) {
              const auto obj = objective_from(objective);
              py::gil_scoped_release release;
              auto r = minimize_incomplete_ratio(n, k, obj, make_config(budget, restarts, seed));
              py::gil_scoped_acquire acquire;
              return report(r);
          },
          py::arg("n"), py::arg("k"), py::arg("objective") = "value-at-one", py::arg("budget") = 20000,
          py::arg("restarts") = 32, py::arg("seed") = 0);
    m.def("frontier_sweep",
          [](const std::vector<int>& ns, const std::vector<int>& ks, long budget, int restarts, std::uint64_t seed) {
              py::gil_scoped_release release;
              auto t = frontier_sweep(ns, ks, make_config(budget, restarts, seed));
              py::gil_scoped_acquire acquire;
              return report(t);
          },
          py::arg("n_values"), py::arg("k_values"), py::arg("budget") = 20000, py::arg("restarts") = 32,
          py::arg("seed") = 0);

    m.def("thm24_construct",
          [](int n, int k, long budget, int restarts, std::uint64_t seed) {
              return report(thm24_construct(n, k, make_config(budget, restarts, seed)));
          },
          py::arg("n"), py::arg("k"), py::arg("budget") = 20000, py::arg("restarts") = 32, py::arg("seed") = 0);
    m.def("remark_family", [](double eps, int n) { return report(remark_family(eps, n)); }, py::arg("epsilon"),
          py::arg("n"));
    m.def("classical_family",
          [](const std::string& name, int mm) {
              if (name == "turan-even") return report(classical_family(ClassicalFamily::turan_even, mm));
              if (name == "turan-odd") return report(classical_family(ClassicalFamily::turan_odd, mm));
              throw InvalidArgument("unknown family: " + name);
          },
          py::arg("name"), py::arg("m"));
}
