#include "turanlab/levelsets.hpp"

#include <algorithm>
#include <limits>
#include <cmath>
#include <numbers>

#include "turanlab/bounds.hpp"
#include "turanlab/classes.hpp"
#include "turanlab/errors.hpp"
#include "turanlab/roots.hpp"

namespace turan {

namespace {

constexpr double kNearRealTol = 1e-6;
constexpr double kBoundaryTol = 1e-13;
constexpr double kGeomTol = 1e-9;

Polynomial factored(const Polynomial& p) {
    if (p.is_factored()) return p;
    auto c = p.coefficients();
    return Polynomial::from_zeros(p.leading(), polynomial_roots(c));
}

// |P'(x)|^2 - c^2 |P(x)|^2 from the factored form.
double level_function(const Polynomial& p, double c, double x) {
    auto [v, dv] = p.value_and_derivative(Complex{x, 0.0});
    return std::norm(dv) - c * c * std::norm(v);
}

std::vector<Interval> merge(std::vector<Interval> pieces) {
    std::vector<Interval> out;
    for (const auto& iv : pieces) {
        if (!out.empty() && iv.lo <= out.back().hi) {
            out.back().hi = std::max(out.back().hi, iv.hi);
        } else {
            out.push_back(iv);
        }
    }
    return out;
}

double total_length(const std::vector<Interval>& ivs) {
    double m = 0.0;
    for (const auto& iv : ivs) m += iv.length();
    return m;
}

int zeros_near(const Polynomial& p, Complex target) {
    int count = 0;
    for (const auto& z : p.zeros()) {
        if (std::abs(z - target) <= kGeomTol) ++count;
    }
    return count;
}

}  // namespace

const char* to_string(DecayStatus s) noexcept {
    switch (s) {
        case DecayStatus::satisfied: return "satisfied";
        case DecayStatus::violated: return "violated";
        case DecayStatus::vacuous: return "vacuous";
    }
    return "unknown";
}

std::vector<Interval> logderiv_level_set(const Polynomial& p_in, double c, bool large, const Interval& ambient,
                                         double& boundary_err) {
    boundary_err = 0.0;
    if (p_in.is_zero()) throw InvalidArgument("level set of the zero polynomial");
    if (p_in.degree() == 0) {
        // Logarithmic derivative vanishes identically.
        if (large) return {};
        return {ambient};
    }
    const Polynomial p = factored(p_in);
    const auto groups = merge_close_groups(group_zeros(p.zeros()));

    // Boundary candidates: zeros of T conj(T) (L conj(L) - c^2) with
    // T = prod (x - w_j), L = sum m_j / (x - w_j).
    auto quotient = [&](Complex x) -> Complex {
        Complex pole_sum{0.0, 0.0}, l{0.0, 0.0}, lc{0.0, 0.0}, dl{0.0, 0.0}, dlc{0.0, 0.0};
        for (const auto& g : groups) {
            const double m = g.multiplicity;
            const Complex a = 1.0 / (x - g.value);
            const Complex b = 1.0 / (x - std::conj(g.value));
            pole_sum += a + b;
            l += m * a;
            lc += m * b;
            dl -= m * a * a;
            dlc -= m * b * b;
        }
        const Complex r = l * lc - c * c;
        return 1.0 / (pole_sum + (dl * lc + l * dlc) / r);
    };
    Complex center{0.0, 0.0};
    for (const auto& g : groups) center += g.value;
    center /= static_cast<double>(groups.size());
    double spread = 0.0;
    for (const auto& g : groups) spread = std::max(spread, std::abs(g.value - center));
    const double radius = 1.2 * std::max(spread, static_cast<double>(p.degree()) / c) + 0.1;
    const auto roots = aberth(2 * static_cast<int>(groups.size()), quotient, center, radius).roots;

    std::vector<double> cuts;
    for (const auto& z : roots) {
        if (std::abs(z.imag()) > kNearRealTol * (1.0 + std::abs(z.real()))) continue;
        double x = z.real();
        if (x <= ambient.lo || x >= ambient.hi) continue;
        // Polish by bisection when the candidate brackets a sign change.
        double h = std::max(1e-10, 10.0 * std::abs(z.imag()));
        double a = std::max(ambient.lo, x - h), b = std::min(ambient.hi, x + h);
        double fa = level_function(p, c, a), fb = level_function(p, c, b);
        double width = b - a;
        if ((fa < 0.0) != (fb < 0.0)) {
            while (b - a > kBoundaryTol) {
                const double m = 0.5 * (a + b);
                if (m <= a || m >= b) break;
                const double fm = level_function(p, c, m);
                if ((fm < 0.0) == (fa < 0.0)) {
                    a = m;
                    fa = fm;
                } else {
                    b = m;
                }
            }
            x = 0.5 * (a + b);
            width = b - a;
        }
        cuts.push_back(x);
        boundary_err += std::max(width, kBoundaryTol);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    std::vector<double> pts{ambient.lo};
    pts.insert(pts.end(), cuts.begin(), cuts.end());
    pts.push_back(ambient.hi);

    // Piece membership from |P'/P| itself; a zero of P counts as +inf.
    auto in_set = [&](double x) {
        Complex l{0.0, 0.0};
        for (const auto& g : groups) {
            if (Complex{x, 0.0} == g.value) return large;
            l += static_cast<double>(g.multiplicity) / (x - g.value);
        }
        const double a = std::abs(l);
        return large ? a >= c : a <= c;
    };
    std::vector<Interval> pieces;
    if (ambient.length() == 0.0) {
        if (in_set(ambient.lo)) pieces.push_back(ambient);
        return pieces;
    }
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        if (pts[i + 1] <= pts[i]) continue;
        if (in_set(0.5 * (pts[i] + pts[i + 1]))) pieces.emplace_back(pts[i], pts[i + 1]);
    }
    return merge(std::move(pieces));
}

LevelSetReport small_logderiv_measure(const Polynomial& q, double delta, const Interval& ambient) {
    if (!(delta > 0.0)) throw InvalidArgument("small_logderiv_measure: delta must be positive");
    const int n = q.degree();
    if (n < 1) throw PreconditionViolation("small_logderiv_measure: Q must be nonconstant");
    if (n > kLevelSetDegreeCap) throw UnsupportedDegree(n, kLevelSetDegreeCap);
    if (auto m = is_member(q, ClassSpec(n, 0)); !m) {
        throw PreconditionViolation("small_logderiv_measure: Q must have all zeros in the upper half-disk (" +
                                    m.reason + ")");
    }
    LevelSetReport rep;
    rep.parameter = delta;
    rep.ambient = ambient;
    rep.strict = true;
    double err = 0.0;
    rep.intervals = logderiv_level_set(q, n * delta, false, ambient, err);
    rep.measure.value = total_length(rep.intervals);
    rep.measure.err = err;
    rep.bound = 70.0 * std::numbers::e * delta;
    rep.satisfied = rep.measure.upper() < rep.bound;
    return rep;
}

LevelSetReport large_logderiv_measure(const Polynomial& r, double alpha, const Interval& ambient) {
    if (!(alpha > 0.0)) throw InvalidArgument("large_logderiv_measure: alpha must be positive");
    if (r.is_zero()) throw InvalidArgument("large_logderiv_measure: R must be nonzero");
    const int k = r.degree();
    if (k > kLevelSetDegreeCap) throw UnsupportedDegree(k, kLevelSetDegreeCap);
    LevelSetReport rep;
    rep.parameter = alpha;
    rep.ambient = ambient;
    rep.strict = false;
    double err = 0.0;
    rep.intervals = logderiv_level_set(r, alpha, true, ambient, err);
    rep.measure.value = total_length(rep.intervals);
    rep.measure.err = err;
    rep.bound = 8.0 * std::numbers::sqrt2 * k / alpha;
    rep.satisfied = rep.measure.upper() <= rep.bound;
    return rep;
}

DecayReport incomplete_decay_check(const Polynomial& s_in, int n, int k) {
    if (k < 1 || k > n - 1) throw PreconditionViolation("incomplete_decay_check requires 1 <= k <= n-1");
    if (s_in.is_zero()) throw PreconditionViolation("incomplete_decay_check: S must be nonzero");
    const Polynomial s = factored(s_in);
    if (s.degree() > n || zeros_near(s, 0.0) < n - k) {
        throw PreconditionViolation("incomplete_decay_check: S must be x^(n-k) R with deg R <= k");
    }
    DecayReport rep;
    const double hi = 1.0 - 10.0 * k / static_cast<double>(n - k);
    if (hi < 0.0) return rep;
    rep.window = Interval(0.0, hi);
    const auto norm = sup_norm(s, Interval(0.0, 1.0));
    const double half = 0.5 * (n - k);
    constexpr int kSamples = 10000;
    double worst = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < kSamples; ++i) {
        const double x = hi * i / (kSamples - 1);
        const double lhs = std::abs(s(Complex{x, 0.0}));
        const double rhs = std::pow(x, half) * norm.value;
        worst = std::max(worst, lhs - rhs);
    }
    rep.max_violation = worst;
    const double slack = norm.err + 1e-12 * norm.value;
    rep.status = worst <= slack ? DecayStatus::satisfied : DecayStatus::violated;
    return rep;
}

DecayReport flipped_decay_check(const Polynomial& w_in, int n, int k) {
    if (k < 1 || 2 * k > n) throw PreconditionViolation("flipped_decay_check requires 1 <= k <= n/2");
    if (w_in.is_zero()) throw PreconditionViolation("flipped_decay_check: W must be nonzero");
    const Polynomial w = factored(w_in);
    if (w.degree() > n || zeros_near(w, 1.0) < n - k) {
        throw PreconditionViolation("flipped_decay_check: W must be (1-x)^(n-k) V with deg V <= k");
    }
    DecayReport rep;
    const double lo = 10.0 * (2 * k + 1) / static_cast<double>(n);
    if (lo > 1.0) return rep;
    rep.window = Interval(lo, 1.0);

    // x W(x)^2 avoids the half power.
    std::vector<Complex> zeros{0.0};
    for (const auto& z : w.zeros()) {
        zeros.push_back(z);
        zeros.push_back(z);
    }
    const auto aux = Polynomial::from_zeros(w.leading() * w.leading(), std::move(zeros));
    const auto restricted = sup_norm(aux, rep.window);
    const auto full = sup_norm(aux, Interval(0.0, 1.0));
    rep.restricted_sup = std::sqrt(restricted.value);
    rep.full_sup = std::sqrt(full.value);
    rep.max_violation = rep.restricted_sup - rep.full_sup;
    rep.status = restricted.upper() < full.lower() ? DecayStatus::satisfied : DecayStatus::violated;
    return rep;
}

NeighbourhoodReport mean_value_neighbourhood(const Polynomial& p, int samples) {
    if (p.is_zero()) throw InvalidArgument("mean_value_neighbourhood: zero polynomial");
    if (samples < 2) throw InvalidArgument("mean_value_neighbourhood: need at least 2 samples");
    NeighbourhoodReport rep;
    const auto norm = sup_norm(p);
    rep.norm = norm.value;
    rep.x0 = norm.argmax;
    rep.ratio = turan_ratio(p).value;
    rep.radius = rep.ratio > 0.0 ? 1.0 / (2.0 * rep.ratio) : 2.0;
    const double lo = std::max(-1.0, rep.x0 - rep.radius);
    const double hi = std::min(1.0, rep.x0 + rep.radius);
    double margin = std::numeric_limits<double>::infinity();
    for (int i = 0; i < samples; ++i) {
        const double y = lo + (hi - lo) * i / (samples - 1);
        margin = std::min(margin, std::abs(p(Complex{y, 0.0})) - 0.5 * rep.norm);
    }
    rep.min_margin = margin;
    return rep;
}

BalancingReport balancing_check(const Polynomial& q, const Polynomial& r, int samples) {
    const int nk = q.degree();
    const int k = r.degree();
    if (nk < 1 || k < 1) throw PreconditionViolation("balancing_check: need deg Q >= 1 and deg R >= 1");
    if (auto m = is_member(q, ClassSpec(nk, 0)); !m) {
        throw PreconditionViolation("balancing_check: Q must have all zeros in the upper half-disk");
    }
    BalancingReport rep;
    rep.n = nk + k;
    rep.k = k;
    rep.delta = std::sqrt(2.0 * k / nk);
    rep.threshold = std::sqrt(0.5 * nk * k);

    const Interval unit;
    double err_e = 0.0, err_f = 0.0;
    const auto e_set = logderiv_level_set(q, nk * rep.delta, false, unit, err_e);
    const auto f_set = logderiv_level_set(r, k / rep.delta, true, unit, err_f);
    rep.covered_measure = total_length(e_set) + total_length(f_set);

    auto inside = [](const std::vector<Interval>& set, double x) {
        return std::any_of(set.begin(), set.end(), [&](const Interval& iv) { return iv.contains(x); });
    };
    double worst = std::numeric_limits<double>::infinity();
    for (int i = 0; i < samples; ++i) {
        const double x = -1.0 + 2.0 * i / (samples - 1);
        if (inside(e_set, x) || inside(f_set, x)) continue;
        ++rep.samples_outside;
        const Complex xc{x, 0.0};
        auto [qv, qd] = q.value_and_derivative(xc);
        auto [rv, rd] = r.value_and_derivative(xc);
        if (qv == Complex{0.0, 0.0} || rv == Complex{0.0, 0.0}) continue;
        const double quotient = std::abs(qd / qv + rd / rv);
        worst = std::min(worst, quotient / rep.threshold);
    }
    rep.min_quotient = worst;
    return rep;
}

}  // namespace turan
