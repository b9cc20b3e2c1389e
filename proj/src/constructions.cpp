#include "turanlab/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "turanlab/bounds.hpp"
#include "turanlab/errors.hpp"

namespace turan {

const char* to_string(Confinement c) noexcept {
    switch (c) {
        case Confinement::inside: return "inside";
        case Confinement::outside: return "outside";
        case Confinement::vacuous: return "vacuous";
    }
    return "unknown";
}

const char* to_string(ClassicalFamily f) noexcept {
    switch (f) {
        case ClassicalFamily::turan_even: return "turan-even";
        case ClassicalFamily::turan_odd: return "turan-odd";
    }
    return "unknown";
}

ConstructionReport thm24_construct(int n, int k, const SearchConfig& cfg) {
    if (k < 1 || 2 * k > n) throw PreconditionViolation("thm24_construct requires 1 <= k <= n/2");
    if (n > kSearchDegreeCap) throw PreconditionViolation("thm24_construct requires n <= 30");

    const auto inner = minimize_incomplete_ratio(n, k, IncompleteObjective::sup_norm, cfg);
    const Polynomial& q = inner.best;
    const int a = n - k + 1;

    // R(x) = Q(1 - x): zeros 1 - q_i, leading lead(Q) (-1)^deg Q.
    std::vector<Complex> rz;
    for (const auto& z : q.zeros()) rz.push_back(z == Complex{0.0, 0.0} ? Complex{1.0, 0.0} : 1.0 - z);
    const Complex rlead = q.leading() * ((q.degree() % 2 == 0) ? 1.0 : -1.0);
    const auto r = Polynomial::from_zeros(rlead, rz);

    // P(x) = R(x^2): each zero rho of R splits into +-sqrt(rho).
    std::vector<Complex> pz, uz;
    for (const auto& z : rz) {
        if (z == Complex{1.0, 0.0}) {
            pz.push_back({1.0, 0.0});
            pz.push_back({-1.0, 0.0});
        } else {
            const Complex s = std::sqrt(z);
            pz.push_back(s);
            pz.push_back(-s);
        }
    }
    // U from P = (1 - x^2)^a U; V from Q = x^a V.
    int taken_plus = 0, taken_minus = 0;
    for (const auto& z : pz) {
        if (z == Complex{1.0, 0.0} && taken_plus < a) {
            ++taken_plus;
        } else if (z == Complex{-1.0, 0.0} && taken_minus < a) {
            ++taken_minus;
        } else {
            uz.push_back(z);
        }
    }
    std::vector<Complex> vz;
    int taken_zero = 0;
    for (const auto& z : q.zeros()) {
        if (z == Complex{0.0, 0.0} && taken_zero < a) {
            ++taken_zero;
        } else {
            vz.push_back(z);
        }
    }
    const auto p = Polynomial::from_zeros(rlead, pz);

    ConstructionReport rep;
    rep.name = "thm24";
    rep.p = p;
    rep.intermediate.emplace("Q", q);
    rep.intermediate.emplace("R", r);
    rep.intermediate.emplace("P", p);
    rep.intermediate.emplace("U", Polynomial::from_zeros(rlead * ((a % 2 == 0) ? 1.0 : -1.0), uz));
    rep.intermediate.emplace("V", Polynomial::from_zeros(q.leading(), vz));
    rep.ratio = turan_ratio(p, Interval{}, 1e-12);
    rep.advertised_class = ClassSpec(2 * n, 2 * k, true);
    rep.class_check = is_member(p, rep.advertised_class);
    rep.inner_degree = static_cast<int>(uz.size());

    const double radius = std::sqrt(10.0 * (2 * k + 1) / n);
    rep.confinement_radius = radius;
    rep.predicted_bound = 2.0 * std::min(1.0, radius) * inner.ratio.value;
    rep.claims_upper_bound = true;

    const auto dp = derivative(p);
    const auto dsup = sup_norm(dp, Interval(0.0, 1.0), 1e-12);
    rep.maximizer = dsup.argmax;
    if (radius >= 1.0) {
        rep.confinement = Confinement::vacuous;
    } else {
        rep.confinement = dsup.argmax <= radius ? Confinement::inside : Confinement::outside;
    }

    const auto pn = sup_norm(p, Interval{}, 1e-12);
    const auto qn = sup_norm(q, Interval(0.0, 1.0), 1e-12);
    rep.norm_identity_gap = std::abs(pn.value - qn.value);
    rep.norm_identity_err = pn.err + qn.err;

    const auto dr = derivative(r);
    const double dpn = std::max(dsup.value, 1e-300);
    double gap = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double x = -1.0 + 2.0 * i / 99.0;
        const Complex lhs = dp(Complex{x, 0.0});
        const Complex rhs = 2.0 * x * dr(Complex{x * x, 0.0});
        gap = std::max(gap, std::abs(lhs - rhs) / dpn);
    }
    rep.derivative_identity_gap = gap;
    return rep;
}

int remark_even_m(double epsilon) {
    if (!(epsilon > 0.0) || epsilon > 1.0) throw InvalidArgument("remark family requires 0 < epsilon <= 1");
    const double inv = 1.0 / epsilon;
    int m = 2 * static_cast<int>(std::floor(inv / 2.0)) + 2;
    while (m - 2 > inv) m -= 2;
    return m;
}

ConstructionReport remark_family(double epsilon, int n) {
    const int m = remark_even_m(epsilon);
    if (n < 1) throw InvalidArgument("remark family requires n >= 1");

    std::vector<Complex> zeros;
    zeros.reserve(static_cast<std::size_t>(m) * n);
    for (int j = 0; j < m; ++j) {
        Complex w;
        if (j == 0) {
            w = {1.0, 0.0};
        } else if (2 * j == m) {
            w = {-1.0, 0.0};
        } else if (4 * j == m) {
            w = {0.0, 1.0};
        } else if (4 * j == 3 * m) {
            w = {0.0, -1.0};
        } else {
            w = std::polar(1.0, 2.0 * std::numbers::pi * j / m);
        }
        for (int t = 0; t < n; ++t) zeros.push_back(w);
    }
    const auto p = Polynomial::from_zeros(1.0, std::move(zeros));
    const int deg = m * n;

    ConstructionReport rep;
    rep.name = "remark";
    rep.p = p;
    rep.intermediate.emplace("P", p);
    rep.m = m;
    rep.ratio = turan_ratio(p, Interval{}, 1e-12);
    rep.norm = sup_norm(p, Interval{}, 1e-12).value;
    rep.maximizer = sup_norm(derivative(p), Interval(0.0, 1.0), 1e-12).argmax;
    rep.predicted_maximizer = std::pow(static_cast<double>(m - 1) / (deg - 1), 1.0 / m);
    rep.predicted_bound = std::pow(1.0 / epsilon + 2.0, 1.0 - epsilon) * std::pow(static_cast<double>(deg), epsilon);
    rep.claims_upper_bound = true;
    // Zeros in D+ are the roots of unity with argument in [0, pi].
    rep.advertised_class = ClassSpec(deg, deg - (m / 2 + 1) * n, true);
    rep.class_check = is_member(p, rep.advertised_class);
    return rep;
}

ConstructionReport classical_family(ClassicalFamily family, int m) {
    if (m < 1 || 2 * m + 1 > kExpansionCap) throw InvalidArgument("classical family requires 1 <= m and 2m+1 <= 60");
    std::vector<Complex> zeros;
    for (int i = 0; i < m; ++i) {
        zeros.push_back({1.0, 0.0});
        zeros.push_back({-1.0, 0.0});
    }
    if (family == ClassicalFamily::turan_odd) zeros.push_back({-1.0, 0.0});
    const auto p = Polynomial::from_zeros(1.0, std::move(zeros));
    const int deg = p.degree();

    ConstructionReport rep;
    rep.name = to_string(family);
    rep.p = p;
    rep.intermediate.emplace("P", p);
    rep.ratio = turan_ratio(p, Interval{}, 1e-12);
    rep.turan_bound = turan_lower(deg);
    rep.sharpness = rep.ratio.value / std::sqrt(static_cast<double>(deg));
    // A lower bound here, so no upper-bound claim is made.
    rep.predicted_bound = *rep.turan_bound;
    rep.claims_upper_bound = false;
    rep.advertised_class = ClassSpec(deg, 0, true);
    rep.class_check = is_member(p, rep.advertised_class);
    return rep;
}

}  // namespace turan
