#include "turanlab/supnorm.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

#include "turanlab/errors.hpp"
#include "turanlab/roots.hpp"

namespace turan {

namespace {

constexpr double kEps = 2.220446049250313e-16;
constexpr double kMergeDistance = 1e-9;
constexpr double kNearRealTol = 1e-6;
constexpr double kCriticalResidual = 1e-8;
constexpr std::size_t kMaxGridRefinements = 4'000'000;

double checked_abs(const Polynomial& p, double x) {
    const double v = std::abs(p(Complex{x, 0.0}));
    if (!std::isfinite(v)) {
        throw NumericOverflow("non-finite polynomial value at x = " + std::to_string(x) +
                              "; rescale the polynomial or the interval");
    }
    return v;
}

// Relative rounding bound for factored evaluation of a degree-n product.
double eval_rel_error(int n) { return 4.0 * (n + 2) * kEps; }

double pick_leftmost(const std::vector<std::pair<double, double>>& samples, double best, double slack) {
    double arg = std::numeric_limits<double>::infinity();
    for (const auto& [x, v] : samples) {
        if (v >= best - slack) arg = std::min(arg, x);
    }
    return arg;
}

CertifiedValue constant_norm(const Polynomial& p, const Interval& interval, NormMethod method) {
    CertifiedValue out;
    out.value = p.is_zero() ? 0.0 : std::abs(p.leading());
    out.err = 0.0;
    out.method = method;
    out.argmax = interval.lo;
    return out;
}

CertifiedValue grid_sup_norm(const Polynomial& p, const Interval& interval, double tol) {
    const int n = p.degree();
    if (n <= 0) return constant_norm(p, interval, NormMethod::certified_grid);
    const double a = interval.lo, b = interval.hi;
    if (interval.length() == 0.0) {
        CertifiedValue out;
        out.value = checked_abs(p, a);
        out.err = eval_rel_error(n) * out.value;
        out.method = NormMethod::certified_grid;
        out.argmax = a;
        return out;
    }
    // |P'| <= kappa * ||P|| on [a, b].
    const double kappa = 2.0 * static_cast<double>(n) * n / (b - a);

    // Coarse pass with kappa * h / 2 <= 1/2, so ||P|| <= 2 * max(samples).
    const auto n0 = static_cast<std::size_t>(2.0 * n * n) + 2;
    const double h0 = (b - a) / static_cast<double>(n0);
    std::vector<double> vals(n0 + 1);
    double gmax = 0.0, argmax = a;
    for (std::size_t i = 0; i <= n0; ++i) {
        const double x = (i == n0) ? b : a + h0 * static_cast<double>(i);
        vals[i] = checked_abs(p, x);
        if (vals[i] > gmax) {
            gmax = vals[i];
            argmax = x;
        }
    }
    const double rel = eval_rel_error(n);
    // First order: | |P|' | <= kappa ||P||. Second order on the smooth
    // g = |P|^2 of degree 2n: |g''| <= (2/(b-a))^2 (2n)^2 (2n-1)^2 ||P||^2.
    const double two_n = 2.0 * n;
    const double kappa2 = (2.0 / (b - a)) * (2.0 / (b - a)) * two_n * two_n * (two_n - 1.0) * (two_n - 1.0);
    double norm_ub = 2.0 * gmax * (1.0 + rel);

    struct Cell {
        double lo, hi, flo, fhi, ub;
        bool operator<(const Cell& o) const { return ub < o.ub; }
    };
    std::priority_queue<Cell> queue;
    auto push = [&](double lo, double hi, double flo, double fhi) {
        const double h = hi - lo;
        const double fmax = std::max(flo, fhi) * (1.0 + rel);
        const double first = fmax + kappa * norm_ub * h / 2.0;
        const double second = std::sqrt(fmax * fmax + kappa2 * norm_ub * norm_ub * h * h / 8.0);
        queue.push({lo, hi, flo, fhi, std::min(first, second)});
    };
    for (std::size_t i = 0; i < n0; ++i) {
        const double lo = a + h0 * static_cast<double>(i);
        const double hi = (i + 1 == n0) ? b : a + h0 * static_cast<double>(i + 1);
        push(lo, hi, vals[i], vals[i + 1]);
    }
    const double min_width = 4.0 * kEps * std::max({1.0, std::abs(a), std::abs(b)});
    std::size_t refinements = 0;
    while (!queue.empty() && refinements < kMaxGridRefinements) {
        const Cell top = queue.top();
        if (top.ub - gmax * (1.0 + rel) <= tol || top.hi - top.lo <= min_width) break;
        queue.pop();
        const double mid = 0.5 * (top.lo + top.hi);
        const double fm = checked_abs(p, mid);
        if (fm > gmax || (fm == gmax && mid < argmax)) {
            gmax = fm;
            argmax = mid;
        }
        push(top.lo, mid, top.flo, fm);
        push(mid, top.hi, fm, top.fhi);
        if (++refinements % 4096 == 0) norm_ub = std::min(norm_ub, queue.top().ub);
    }
    CertifiedValue out;
    out.value = gmax;
    out.err = std::max(0.0, (queue.empty() ? gmax : queue.top().ub) - gmax) + rel * gmax;
    out.method = NormMethod::certified_grid;
    out.argmax = argmax;
    return out;
}

// Real critical points of |P| from the factored form of (P * conj P)'.
// Returns false when the roots fail their residual check.
bool factored_critical_points(const Polynomial& p, const Interval& interval, std::vector<double>& out) {
    std::vector<Complex> mz;
    mz.reserve(2 * p.zeros().size());
    for (const auto& z : p.zeros()) {
        mz.push_back(z);
        mz.push_back(std::conj(z));
    }
    auto groups = merge_close_groups(group_zeros(mz));
    auto crit = log_derivative_roots(groups);
    if (crit.max_relative_residual > kCriticalResidual) return false;

    // d/dx log|P|^2 = 2 Re sum 1/(x - z) on the real line.
    auto g = [&](double x, double& dg) {
        double s = 0.0, ds = 0.0;
        for (const auto& z : p.zeros()) {
            Complex r = 1.0 / (Complex{x, 0.0} - z);
            s += r.real();
            ds -= (r * r).real();
        }
        dg = ds;
        return s;
    };
    for (const auto& r : crit.roots) {
        if (std::abs(r.imag()) > kNearRealTol * (1.0 + std::abs(r.real()))) continue;
        double x = r.real();
        if (x < interval.lo - kNearRealTol || x > interval.hi + kNearRealTol) continue;
        x = std::clamp(x, interval.lo, interval.hi);
        // Newton polish on the real logarithmic derivative.
        for (int it = 0; it < 3; ++it) {
            double dg = 0.0;
            const double gx = g(x, dg);
            if (!std::isfinite(gx) || dg == 0.0 || !std::isfinite(dg)) break;
            const double nx = x - gx / dg;
            if (!interval.contains(nx) || std::abs(nx - x) > 1e-6 * (1.0 + std::abs(x))) break;
            x = nx;
        }
        out.push_back(x);
    }
    std::sort(out.begin(), out.end());
    return true;
}

CertifiedValue critical_point_sup_norm(const Polynomial& p, const Interval& interval, double tol) {
    const int n = p.degree();
    if (n <= 0) return constant_norm(p, interval, NormMethod::critical_points);

    std::vector<double> candidates;
    if (p.is_factored()) {
        if (!factored_critical_points(p, interval, candidates)) {
            return grid_sup_norm(p, interval, tol);
        }
    } else {
        auto m2 = modulus_square_on_reals(p);
        candidates = real_roots(m2.derivative(), interval, 1e-13).roots;
    }
    candidates.push_back(interval.lo);
    candidates.push_back(interval.hi);

    std::vector<std::pair<double, double>> samples;
    samples.reserve(candidates.size());
    double best = 0.0;
    for (double x : candidates) {
        const double v = checked_abs(p, x);
        samples.emplace_back(x, v);
        best = std::max(best, v);
    }
    CertifiedValue out;
    out.value = best;
    out.err = eval_rel_error(n) * best;
    out.method = NormMethod::critical_points;
    out.argmax = pick_leftmost(samples, best, out.err);
    return out;
}

// Sign of g at x with rounding noise folded to zero.
int noisy_sign(const RealPolynomial& g, double x) {
    const double v = g(x);
    if (std::abs(v) <= g.eval_error_bound(x)) return 0;
    return v > 0.0 ? 1 : -1;
}

double bisect(const RealPolynomial& g, double a, double b, int sa, double tol) {
    while (b - a > tol) {
        const double m = 0.5 * (a + b);
        if (m <= a || m >= b) break;
        const int sm = noisy_sign(g, m);
        if (sm == 0) return m;
        if (sm == sa) {
            a = m;
        } else {
            b = m;
        }
    }
    return 0.5 * (a + b);
}

std::vector<double> isolate(const RealPolynomial& g, double lo, double hi, double tol) {
    const int deg = g.degree();
    if (deg <= 0) return {};
    if (deg == 1) {
        const double r = -g.coeff(0) / g.coeff(1);
        if (r >= lo && r <= hi) return {r};
        return {};
    }
    std::vector<double> pts{lo};
    for (double c : isolate(g.derivative(), lo, hi, tol)) {
        if (c > pts.back()) pts.push_back(c);
    }
    if (hi > pts.back()) pts.push_back(hi);

    std::vector<double> roots;
    std::vector<int> signs(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) signs[i] = noisy_sign(g, pts[i]);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (signs[i] == 0) roots.push_back(pts[i]);
        if (i + 1 < pts.size() && signs[i] != 0 && signs[i + 1] != 0 && signs[i] != signs[i + 1]) {
            roots.push_back(bisect(g, pts[i], pts[i + 1], signs[i], tol));
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

int multiplicity_estimate(const RealPolynomial& g, double x) {
    int m = 1;
    RealPolynomial d = g.derivative();
    while (d.degree() >= 1 && std::abs(d(x)) <= 1e3 * d.eval_error_bound(x)) {
        ++m;
        d = d.derivative();
    }
    return m;
}

}  // namespace

const char* to_string(NormMethod m) noexcept {
    switch (m) {
        case NormMethod::critical_points: return "critical-points";
        case NormMethod::certified_grid: return "certified-grid";
    }
    return "unknown";
}

CertifiedValue sup_norm(const Polynomial& p, const Interval& interval, double tol) {
    if (!(tol > 0.0)) throw InvalidArgument("sup_norm: tol must be positive");
    const auto method = p.degree() <= kExpansionCap ? NormMethod::critical_points : NormMethod::certified_grid;
    return sup_norm(p, interval, tol, method);
}

CertifiedValue sup_norm(const Polynomial& p, const Interval& interval, double tol, NormMethod method) {
    if (!(tol > 0.0)) throw InvalidArgument("sup_norm: tol must be positive");
    if (method == NormMethod::certified_grid) return grid_sup_norm(p, interval, tol);
    return critical_point_sup_norm(p, interval, tol);
}

RootList real_roots(const RealPolynomial& g, const Interval& interval, double tol) {
    if (g.is_zero()) throw InvalidArgument("real_roots: zero polynomial");
    if (!(tol > 0.0)) throw InvalidArgument("real_roots: tol must be positive");
    auto raw = isolate(g, interval.lo, interval.hi, tol);

    RootList out;
    for (std::size_t i = 0; i < raw.size();) {
        std::size_t j = i + 1;
        while (j < raw.size() && raw[j] - raw[j - 1] < kMergeDistance) ++j;
        double x = 0.0;
        for (std::size_t t = i; t < j; ++t) x += raw[t];
        x /= static_cast<double>(j - i);
        int mult = std::max(static_cast<int>(j - i), multiplicity_estimate(g, x));
        out.roots.push_back(x);
        out.residuals.push_back(std::abs(g(x)));
        out.multiplicities.push_back(mult);
        i = j;
    }
    return out;
}

std::vector<double> modulus_critical_points(const Polynomial& p, const Interval& interval) {
    std::vector<double> out;
    if (p.degree() <= 0) return out;
    if (p.is_factored() && factored_critical_points(p, interval, out)) return out;
    auto m2 = modulus_square_on_reals(p);
    return real_roots(m2.derivative(), interval, 1e-13).roots;
}

CertifiedValue total_variation(const Polynomial& p, const Interval& interval) {
    CertifiedValue out;
    out.method = NormMethod::critical_points;
    if (p.degree() <= 0) return out;
    if (p.degree() > kExpansionCap) throw UnsupportedDegree(p.degree(), kExpansionCap);

    double scale = 0.0;
    for (int i = 0; i < 5; ++i) {
        const double x = interval.lo + interval.length() * (0.1 + 0.2 * i);
        const Complex v = p(Complex{x, 0.0});
        if (std::abs(v.imag()) > 1e-9 * (1.0 + std::abs(v))) {
            throw InvalidArgument("total_variation: polynomial is not real-valued on the interval");
        }
        scale = std::max(scale, std::abs(v));
    }

    auto coeffs = p.coefficients();
    std::vector<double> re(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) re[i] = coeffs[i].real();
    RealPolynomial dp = RealPolynomial(std::move(re)).derivative();

    std::vector<double> splits{interval.lo, interval.hi};
    if (!dp.is_zero()) {
        auto rl = real_roots(dp, interval, 1e-13);
        splits.insert(splits.end(), rl.roots.begin(), rl.roots.end());
    }
    // Zeros of P' from the factored route as extra split points; extra
    // points inside monotone pieces leave the sum unchanged.
    if (p.is_factored()) {
        auto d = derivative(p);
        for (const auto& z : d.zeros()) {
            if (std::abs(z.imag()) <= kNearRealTol && interval.contains(z.real())) splits.push_back(z.real());
        }
    }
    std::sort(splits.begin(), splits.end());
    splits.erase(std::unique(splits.begin(), splits.end()), splits.end());

    double total = 0.0, vmax = 0.0;
    double prev = p(Complex{splits.front(), 0.0}).real();
    for (std::size_t i = 1; i < splits.size(); ++i) {
        const double cur = p(Complex{splits[i], 0.0}).real();
        total += std::abs(cur - prev);
        vmax = std::max({vmax, std::abs(cur), std::abs(prev)});
        prev = cur;
    }
    out.value = total;
    out.err = 2.0 * static_cast<double>(splits.size()) * eval_rel_error(p.degree()) * std::max(vmax, scale);
    return out;
}

}  // namespace turan
