#include "turanlab/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "turanlab/errors.hpp"

namespace turan {

namespace {

constexpr double kEps = 2.220446049250313e-16;

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

constexpr int kContourPoints = 64;
constexpr double kCollapseTol = 1e-10;

// Trapezoid-rule contour sums of p'/p on |x - c0| = rho: the root count and
// the power sums about the centroid. True when the members are one root of
// multiplicity members.size(), which then replaces them.
bool collapse_on_circle(std::vector<Complex>& z, const std::vector<std::size_t>& members,
                        const std::function<Complex(Complex)>& newton_quotient, Complex c0, double rho) {
    const auto c = members.size();
    std::vector<Complex> xs(kContourPoints), ws(kContourPoints);
    for (std::size_t k = 0; k < xs.size(); ++k) {
        const Complex u = std::polar(rho, 2.0 * std::numbers::pi * static_cast<double>(k) / kContourPoints);
        const Complex q = newton_quotient(c0 + u);
        if (!finite(q) || q == Complex{0.0, 0.0}) return false;
        xs[k] = u;
        ws[k] = u / q / static_cast<double>(kContourPoints);
    }
    Complex count{0.0, 0.0}, p1{0.0, 0.0};
    for (std::size_t k = 0; k < xs.size(); ++k) {
        count += ws[k];
        p1 += ws[k] * xs[k];
    }
    if (std::abs(count - static_cast<double>(c)) > 1e-6) return false;
    const Complex shift = p1 / static_cast<double>(c);
    for (std::size_t j = 2; j <= c; ++j) {
        Complex pj{0.0, 0.0};
        for (std::size_t k = 0; k < xs.size(); ++k) pj += ws[k] * std::pow(xs[k] - shift, static_cast<int>(j));
        if (std::abs(pj) > kCollapseTol * std::pow(rho, static_cast<double>(j))) return false;
    }
    Complex w = c0 + shift;
    const double tiny = 1e2 * kEps * rho;
    if (std::abs(w.imag()) <= tiny) w.imag(0.0);
    if (std::abs(w.real()) <= tiny) w.real(0.0);
    for (auto i : members) z[i] = w;
    return true;
}

// Near a c-fold root the quotient is only accurate to eps^(1/c), so Aberth
// leaves such roots as a jittered cluster. The cluster is re-resolved on a
// circle far from it, where p'/p is accurate.
bool try_collapse(std::vector<Complex>& z, const std::vector<std::size_t>& members,
                  const std::function<Complex(Complex)>& newton_quotient, double scale) {
    Complex c0{0.0, 0.0};
    for (auto i : members) c0 += z[i];
    c0 /= static_cast<double>(members.size());
    double r_in = 0.0;
    for (auto i : members) r_in = std::max(r_in, std::abs(z[i] - c0));
    double d_out = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < z.size(); ++j) {
        if (std::find(members.begin(), members.end(), j) == members.end()) {
            d_out = std::min(d_out, std::abs(z[j] - c0));
        }
    }
    r_in = std::max(r_in, 1e-14 * (1.0 + std::abs(c0)));
    const double outer = std::min(d_out, scale);
    if (outer < 9.0 * r_in) return false;
    for (double rho : {outer / 3.0, std::sqrt(r_in * outer)}) {
        if (collapse_on_circle(z, members, newton_quotient, c0, rho)) return true;
    }
    return false;
}

void collapse_clusters(std::vector<Complex>& z, const std::function<Complex(Complex)>& newton_quotient,
                       double scale) {
    const std::size_t n = z.size();
    std::vector<bool> fixed(n, false);
    for (double link : {1e-8, 1e-6, 1e-4, 1e-2, 1e-1}) {
        // Single-linkage components among roots not yet collapsed.
        std::vector<int> comp(n, -1);
        int next = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (fixed[i] || comp[i] >= 0) continue;
            comp[i] = next;
            std::vector<std::size_t> stack{i};
            while (!stack.empty()) {
                const auto a = stack.back();
                stack.pop_back();
                for (std::size_t b = 0; b < n; ++b) {
                    if (fixed[b] || comp[b] >= 0) continue;
                    if (std::abs(z[a] - z[b]) <= link * (1.0 + std::abs(z[a]))) {
                        comp[b] = next;
                        stack.push_back(b);
                    }
                }
            }
            ++next;
        }
        for (int c = 0; c < next; ++c) {
            std::vector<std::size_t> members;
            for (std::size_t i = 0; i < n; ++i) {
                if (comp[i] == c) members.push_back(i);
            }
            if (members.size() < 2) continue;
            if (try_collapse(z, members, newton_quotient, scale)) {
                for (auto i : members) fixed[i] = true;
            }
        }
    }
}

}  // namespace

AberthResult aberth(int degree, const std::function<Complex(Complex)>& newton_quotient,
                    Complex center, double radius, int max_iterations) {
    AberthResult out;
    if (degree <= 0) {
        out.converged = true;
        return out;
    }
    const auto n = static_cast<std::size_t>(degree);
    std::vector<Complex> z(n);
    // Offset angle breaks the symmetry of real polynomials.
    for (std::size_t i = 0; i < n; ++i) {
        const double theta = 2.0 * std::numbers::pi * static_cast<double>(i) / degree + 0.4;
        z[i] = center + std::polar(radius, theta);
    }
    std::vector<bool> done(n, false);
    std::size_t remaining = n;

    int it = 0;
    for (; it < max_iterations && remaining > 0; ++it) {
        for (std::size_t i = 0; i < n; ++i) {
            if (done[i]) continue;
            Complex q = newton_quotient(z[i]);
            if (!finite(q)) {
                // Landed on a pole of the quotient; nudge off it.
                z[i] += Complex(1e-7, 1e-7) * (1.0 + std::abs(z[i]));
                continue;
            }
            Complex s{0.0, 0.0};
            for (std::size_t j = 0; j < n; ++j) {
                if (j == i) continue;
                Complex d = z[i] - z[j];
                if (d == Complex{0.0, 0.0}) d = Complex(kEps, kEps) * (1.0 + std::abs(z[i]));
                s += 1.0 / d;
            }
            Complex denom = 1.0 - q * s;
            Complex step = (std::abs(denom) > 0.0) ? q / denom : q;
            if (!finite(step)) step = q;
            z[i] -= step;
            if (std::abs(step) <= 4.0 * kEps * (1.0 + std::abs(z[i]))) {
                done[i] = true;
                --remaining;
            }
        }
    }
    out.converged = remaining == 0;
    if (n >= 2) collapse_clusters(z, newton_quotient, radius);
    out.roots = std::move(z);
    out.iterations = it;
    return out;
}

LogDerivativeRoots log_derivative_roots(std::span<const ZeroGroup> groups) {
    LogDerivativeRoots out;
    const int d = static_cast<int>(groups.size());
    if (d <= 1) {
        out.converged = true;
        return out;
    }
    double total = 0.0;
    Complex centroid{0.0, 0.0};
    for (const auto& g : groups) {
        total += g.multiplicity;
        centroid += static_cast<double>(g.multiplicity) * g.value;
    }
    centroid /= total;
    double spread = 0.0;
    for (const auto& g : groups) spread = std::max(spread, std::abs(g.value - centroid));

    // S = T * L with T = prod (x - w_j), L = sum m_j / (x - w_j);
    // S'/S = sum 1/(x - w_j) + L'/L.
    auto quotient = [&](Complex x) -> Complex {
        Complex inv_sum{0.0, 0.0}, l{0.0, 0.0}, dl{0.0, 0.0};
        for (const auto& g : groups) {
            Complex r = 1.0 / (x - g.value);
            inv_sum += r;
            l += static_cast<double>(g.multiplicity) * r;
            dl -= static_cast<double>(g.multiplicity) * r * r;
        }
        return 1.0 / (inv_sum + dl / l);
    };
    auto res = aberth(d - 1, quotient, centroid, 0.7 * spread + 1e-3);
    out.converged = res.converged;

    for (const auto& x : res.roots) {
        // |sum_j m_j prod_{l != j} (x - w_l)| against the sum of term magnitudes.
        Complex acc{0.0, 0.0};
        double scale = 0.0;
        for (std::size_t j = 0; j < groups.size(); ++j) {
            Complex term = static_cast<double>(groups[j].multiplicity);
            for (std::size_t l = 0; l < groups.size(); ++l) {
                if (l != j) term *= (x - groups[l].value);
            }
            acc += term;
            scale += std::abs(term);
        }
        const double rel = scale > 0.0 ? std::abs(acc) / scale : 0.0;
        out.max_relative_residual = std::max(out.max_relative_residual, rel);
    }
    out.roots = std::move(res.roots);
    return out;
}

std::vector<ZeroGroup> merge_close_groups(std::vector<ZeroGroup> groups, double rel_tol) {
    const std::size_t n = groups.size();
    std::vector<int> comp(n, -1);
    int next = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (comp[i] >= 0) continue;
        comp[i] = next;
        std::vector<std::size_t> stack{i};
        while (!stack.empty()) {
            const auto a = stack.back();
            stack.pop_back();
            for (std::size_t b = 0; b < n; ++b) {
                if (comp[b] < 0 && std::abs(groups[a].value - groups[b].value) <=
                                       rel_tol * (1.0 + std::abs(groups[a].value))) {
                    comp[b] = next;
                    stack.push_back(b);
                }
            }
        }
        ++next;
    }
    if (next == static_cast<int>(n)) return groups;
    std::vector<ZeroGroup> out;
    for (int c = 0; c < next; ++c) {
        Complex sum{0.0, 0.0};
        int mult = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (comp[i] != c) continue;
            sum += static_cast<double>(groups[i].multiplicity) * groups[i].value;
            mult += groups[i].multiplicity;
        }
        out.push_back({sum / static_cast<double>(mult), mult});
    }
    return out;
}

std::vector<Complex> polynomial_roots(std::span<const Complex> coeffs) {
    const int deg = static_cast<int>(coeffs.size()) - 1;
    if (deg < 1) return {};
    if (coeffs.back() == Complex{0.0, 0.0}) {
        throw InvalidArgument("polynomial_roots: leading coefficient is zero");
    }
    // Cauchy-type radius: roots lie within 1 + max |a_i / a_n|; start inside it.
    double bound = 0.0;
    for (int i = 0; i < deg; ++i) {
        bound = std::max(bound, std::abs(coeffs[static_cast<std::size_t>(i)] / coeffs.back()));
    }
    auto quotient = [&](Complex x) -> Complex {
        Complex p = coeffs.back(), dp{0.0, 0.0};
        for (int i = deg - 1; i >= 0; --i) {
            dp = dp * x + p;
            p = p * x + coeffs[static_cast<std::size_t>(i)];
        }
        return p / dp;
    };
    Complex center = -coeffs[static_cast<std::size_t>(deg - 1)] / (coeffs.back() * static_cast<double>(deg));
    double radius = std::min(1.0 + bound, std::pow(std::abs(coeffs[0] / coeffs.back()), 1.0 / deg) + 1.0);
    return aberth(deg, quotient, center, radius).roots;
}

}  // namespace turan
