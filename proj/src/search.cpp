#include "turanlab/search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "turanlab/constructions.hpp"
#include "turanlab/errors.hpp"
#include "turanlab/roots.hpp"

namespace turan {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kGolden = 0.6180339887498949;
constexpr int kRefineTop = 4;

// Maximize g on [a, b] by golden-section search, seeded with the best of the
// endpoints. Returns the best value seen.
template <class G>
double golden_max(G&& g, double a, double b, double seed_value) {
    double best = seed_value;
    double x1 = b - kGolden * (b - a), x2 = a + kGolden * (b - a);
    double f1 = g(x1), f2 = g(x2);
    best = std::max({best, f1, f2});
    while (b - a > 1e-10) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + kGolden * (b - a);
            f2 = g(x2);
            best = std::max(best, f2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - kGolden * (b - a);
            f1 = g(x1);
            best = std::max(best, f1);
        }
    }
    return best;
}

// Sup of |g| over [lo, hi] from Chebyshev-node samples, refining the top
// local maxima. nodes are descending (x_0 = hi).
template <class G>
double sampled_sup(G&& g, const std::vector<double>& nodes, const std::vector<double>& vals) {
    const std::size_t n = nodes.size();
    std::vector<std::size_t> peaks;
    for (std::size_t i = 0; i < n; ++i) {
        const bool left = i == 0 || vals[i] >= vals[i - 1];
        const bool right = i + 1 == n || vals[i] >= vals[i + 1];
        if (left && right) peaks.push_back(i);
    }
    std::sort(peaks.begin(), peaks.end(), [&](std::size_t a, std::size_t b) { return vals[a] > vals[b]; });
    double best = *std::max_element(vals.begin(), vals.end());
    for (std::size_t t = 0; t < peaks.size() && t < static_cast<std::size_t>(kRefineTop); ++t) {
        const std::size_t i = peaks[t];
        const double hi = nodes[i == 0 ? 0 : i - 1];
        const double lo = nodes[i + 1 == n ? n - 1 : i + 1];
        best = std::max(best, golden_max(g, lo, hi, vals[i]));
    }
    return best;
}

std::vector<double> chebyshev_nodes(int count, double lo, double hi) {
    std::vector<double> x(static_cast<std::size_t>(count) + 1);
    for (int j = 0; j <= count; ++j) {
        const double c = std::cos(std::numbers::pi * j / count);
        x[static_cast<std::size_t>(j)] = 0.5 * (lo + hi) + 0.5 * (hi - lo) * c;
    }
    x.front() = hi;
    x.back() = lo;
    return x;
}

// ---- incomplete polynomials Q = x^a R, R in the Chebyshev basis of [0,1]

struct IncompleteShape {
    int a = 1;                 // power of x
    std::vector<double> cheb;  // R = sum c_j T_j(2x - 1)

    // Q(x), Q'(x)
    std::pair<double, double> eval(double x) const {
        const double t = 2.0 * x - 1.0;
        double r = 0.0, dr = 0.0;
        double tp = 1.0, tc = t, dtp = 0.0, dtc = 1.0;
        for (std::size_t j = 0; j < cheb.size(); ++j) {
            double tj, dtj;
            if (j == 0) {
                tj = 1.0;
                dtj = 0.0;
            } else if (j == 1) {
                tj = t;
                dtj = 1.0;
            } else {
                tj = 2.0 * t * tc - tp;
                dtj = 2.0 * tc + 2.0 * t * dtc - dtp;
                tp = tc;
                tc = tj;
                dtp = dtc;
                dtc = dtj;
            }
            r += cheb[j] * tj;
            dr += cheb[j] * 2.0 * dtj;
        }
        const double xa1 = a >= 1 ? std::pow(x, a - 1) : 0.0;
        return {xa1 * x * r, a * xa1 * r + xa1 * x * dr};
    }

    // Ascending power-basis coefficients of R.
    std::vector<double> power_coeffs() const {
        const std::size_t m = cheb.size();
        std::vector<double> out(m, 0.0);
        std::vector<double> tprev{1.0}, tcur{-1.0, 2.0};
        for (std::size_t j = 0; j < m; ++j) {
            const std::vector<double>* tj = nullptr;
            std::vector<double> tnext;
            if (j == 0) {
                tj = &tprev;
            } else if (j == 1) {
                tj = &tcur;
            } else {
                // T_{j} = 2(2x-1) T_{j-1} - T_{j-2}
                tnext.assign(tcur.size() + 1, 0.0);
                for (std::size_t i = 0; i < tcur.size(); ++i) {
                    tnext[i] -= 2.0 * tcur[i];
                    tnext[i + 1] += 4.0 * tcur[i];
                }
                for (std::size_t i = 0; i < tprev.size(); ++i) tnext[i] -= tprev[i];
                tprev = std::move(tcur);
                tcur = std::move(tnext);
                tj = &tcur;
            }
            for (std::size_t i = 0; i < tj->size(); ++i) out[i] += cheb[j] * (*tj)[i];
        }
        return out;
    }
};

struct IncompleteValue {
    double deriv_norm = 0.0;
    double denom = 0.0;
};

IncompleteValue incomplete_objective(const IncompleteShape& q, IncompleteObjective obj, int degree) {
    const int count = std::max(64, 8 * degree);
    static thread_local std::vector<double> nodes;
    static thread_local int cached_count = -1;
    if (cached_count != count) {
        nodes = chebyshev_nodes(count, 0.0, 1.0);
        cached_count = count;
    }
    std::vector<double> qv(nodes.size()), dqv(nodes.size()), adq(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        auto [v, d] = q.eval(nodes[i]);
        qv[i] = v;
        dqv[i] = d;
        adq[i] = std::abs(d);
    }
    IncompleteValue out;
    out.deriv_norm = sampled_sup([&](double x) { return std::abs(q.eval(x).second); }, nodes, adq);
    switch (obj) {
        case IncompleteObjective::value_at_one: out.denom = std::abs(q.eval(1.0).first); break;
        case IncompleteObjective::sup_norm: {
            std::vector<double> aq(qv.size());
            for (std::size_t i = 0; i < qv.size(); ++i) aq[i] = std::abs(qv[i]);
            out.denom = sampled_sup([&](double x) { return std::abs(q.eval(x).first); }, nodes, aq);
            break;
        }
        case IncompleteObjective::total_variation: {
            // Split at sign changes of Q' (nodes descend from 1 to 0).
            std::vector<double> splits{1.0};
            for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
                if ((dqv[i] > 0.0 && dqv[i + 1] < 0.0) || (dqv[i] < 0.0 && dqv[i + 1] > 0.0)) {
                    double hi = nodes[i], lo = nodes[i + 1];
                    const bool hi_pos = dqv[i] > 0.0;
                    for (int it = 0; it < 60 && hi - lo > 1e-14; ++it) {
                        const double m = 0.5 * (lo + hi);
                        if ((q.eval(m).second > 0.0) == hi_pos) {
                            hi = m;
                        } else {
                            lo = m;
                        }
                    }
                    splits.push_back(0.5 * (lo + hi));
                }
            }
            splits.push_back(0.0);
            double v = 0.0;
            for (std::size_t i = 0; i + 1 < splits.size(); ++i) {
                v += std::abs(q.eval(splits[i]).first - q.eval(splits[i + 1]).first);
            }
            out.denom = v;
            break;
        }
    }
    return out;
}

double incomplete_ratio(const IncompleteShape& q, IncompleteObjective obj, int degree) {
    const auto v = incomplete_objective(q, obj, degree);
    if (!(v.denom > 0.0)) return kInf;
    return v.deriv_norm / v.denom;
}

double norm2(std::span<const double> x) {
    double s = 0.0;
    for (double v : x) s += v * v;
    return std::sqrt(s);
}

struct Candidate {
    double value = kInf;
    Polynomial poly;
    std::vector<double> params;
    std::string origin;
};

// Deterministic choice: smaller value, ties broken by parameter norm.
bool better(const Candidate& a, const Candidate& b) {
    const double tie = 1e-12 * std::max(1.0, std::abs(b.value));
    if (a.value < b.value - tie) return true;
    if (a.value > b.value + tie) return false;
    return norm2(a.params) < norm2(b.params);
}

double fast_ratio_or_inf(const Polynomial& p) {
    const auto fn = fast_norms(p);
    if (!(fn.norm > 0.0) || !std::isfinite(fn.deriv_norm)) return kInf;
    return fn.ratio();
}

// Drop zeros while membership survives and the ratio improves.
Candidate deflate(Candidate c, const ClassSpec& spec) {
    bool improved = true;
    while (improved && c.poly.degree() > 1) {
        improved = false;
        const auto zeros = std::vector<Complex>(c.poly.zeros().begin(), c.poly.zeros().end());
        Candidate best_step = c;
        for (std::size_t i = 0; i < zeros.size(); ++i) {
            auto reduced = zeros;
            reduced.erase(reduced.begin() + static_cast<std::ptrdiff_t>(i));
            auto p = Polynomial::from_zeros(1.0, std::move(reduced));
            if (!is_member(p, spec)) continue;
            const double v = fast_ratio_or_inf(p);
            if (v < best_step.value - 1e-12 * std::abs(best_step.value)) {
                best_step = Candidate{v, std::move(p), {}, "deflated"};
            }
        }
        if (best_step.value < c.value) {
            c = std::move(best_step);
            improved = true;
        }
    }
    return c;
}

// The optimizer works in smooth periodic coordinates u; embed's clamped
// slots are reached through r = (1 - cos u) / 2, theta = pi (1 - cos v) / 2
// and p0 = cos u, so no direction of the simplex is flat.
std::vector<double> to_embed(std::span<const double> u, const ClassSpec& spec) {
    std::vector<double> x(u.begin(), u.end());
    const int m = spec.constrained();
    for (int i = 0; i < spec.n; ++i) {
        const auto a = 2 * static_cast<std::size_t>(i), b = a + 1;
        if (i == 0 && spec.pin_interval_zero) {
            x[a] = std::cos(u[a]);
            x[b] = 0.0;
        } else if (i < m) {
            x[a] = 0.5 * (1.0 - std::cos(u[a]));
            x[b] = std::numbers::pi * 0.5 * (1.0 - std::cos(u[b]));
        }
    }
    return x;
}

std::vector<double> from_embed(std::span<const double> x, const ClassSpec& spec) {
    std::vector<double> u(x.begin(), x.end());
    const int m = spec.constrained();
    auto arccos = [](double c) { return std::acos(std::clamp(c, -1.0, 1.0)); };
    for (int i = 0; i < spec.n; ++i) {
        const auto a = 2 * static_cast<std::size_t>(i), b = a + 1;
        if (i == 0 && spec.pin_interval_zero) {
            u[a] = arccos(x[a]);
            u[b] = 0.0;
        } else if (i < m) {
            u[a] = arccos(1.0 - 2.0 * x[a]);
            u[b] = arccos(1.0 - 2.0 * x[b] / std::numbers::pi);
        }
    }
    return u;
}

Trend classify(const std::vector<double>& v, double tol) {
    if (v.size() < 2) return Trend::undetermined;
    bool up = false, down = false;
    for (std::size_t i = 1; i < v.size(); ++i) {
        const double d = v[i] - v[i - 1];
        const double t = tol * std::max(1.0, std::abs(v[i - 1]));
        if (d > t) up = true;
        if (d < -t) down = true;
    }
    if (up && down) return Trend::mixed;
    if (up) return Trend::increasing;
    if (down) return Trend::decreasing;
    return Trend::flat;
}

// Explicit members of F_{n,k} with a zero in [-1, 1].
std::vector<ConstructionReport> constructions_for(int n, int k, const SearchConfig& cfg) {
    std::vector<ConstructionReport> out;
    if (n >= 2 && n % 2 == 0) {
        out.push_back(classical_family(ClassicalFamily::turan_even, n / 2));
    } else if (n >= 3) {
        out.push_back(classical_family(ClassicalFamily::turan_odd, (n - 1) / 2));
    }
    const int kappa = k / 2;
    if (n % 2 == 0 && kappa >= 1 && 2 * kappa <= n / 2) {
        out.push_back(thm24_construct(n / 2, kappa, cfg));
    }
    return out;
}

}  // namespace

void SearchConfig::validate() const {
    if (budget < 1) throw InvalidArgument("search: budget must be >= 1");
    if (restarts < 1) throw InvalidArgument("search: restarts must be >= 1");
    if (!(simplex_scale > 0.0)) throw InvalidArgument("search: simplex_scale must be positive");
    if (!(tol > 0.0)) throw InvalidArgument("search: tol must be positive");
}

const char* to_string(IncompleteObjective o) noexcept {
    switch (o) {
        case IncompleteObjective::value_at_one: return "value-at-one";
        case IncompleteObjective::total_variation: return "total-variation";
        case IncompleteObjective::sup_norm: return "sup-norm";
    }
    return "unknown";
}

const char* to_string(Trend t) noexcept {
    switch (t) {
        case Trend::increasing: return "increasing";
        case Trend::decreasing: return "decreasing";
        case Trend::flat: return "flat";
        case Trend::mixed: return "mixed";
        case Trend::undetermined: return "undetermined";
    }
    return "unknown";
}

FastNorms fast_norms(const Polynomial& p) {
    FastNorms out;
    if (p.is_zero()) return out;
    const int n = p.degree();
    if (n == 0) {
        out.norm = std::abs(p.leading());
        return out;
    }
    const int count = std::max(48, 6 * n);
    static thread_local std::vector<double> nodes;
    static thread_local int cached_count = -1;
    if (cached_count != count) {
        nodes = chebyshev_nodes(count, -1.0, 1.0);
        cached_count = count;
    }
    std::vector<double> v(nodes.size()), dv(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        auto [a, b] = p.value_and_derivative(Complex{nodes[i], 0.0});
        v[i] = std::abs(a);
        dv[i] = std::abs(b);
    }
    out.norm = sampled_sup([&](double x) { return std::abs(p(Complex{x, 0.0})); }, nodes, v);
    out.deriv_norm = sampled_sup(
        [&](double x) { return std::abs(p.value_and_derivative(Complex{x, 0.0}).second); }, nodes, dv);
    return out;
}

SimplexResult nelder_mead(const std::function<double(std::span<const double>)>& f, std::vector<double> x0,
                          const SimplexOptions& opts) {
    SimplexResult res;
    const std::size_t d = x0.size();
    double best = kInf;
    auto eval = [&](std::span<const double> x) {
        double v = f(x);
        ++res.evaluations;
        if (!std::isfinite(v)) v = kInf;
        if (v < best) {
            best = v;
            res.x.assign(x.begin(), x.end());
            res.trace.push_back({res.evaluations, v});
        }
        return v;
    };
    eval(x0);
    if (d == 0) {
        res.value = best;
        return res;
    }

    std::vector<std::vector<double>> simplex(d + 1, std::vector<double>(d));
    std::vector<double> fv(d + 1);
    std::vector<double> centroid(d), trial(d), trial2(d);
    double round_start = best;
    bool first_round = true;
    int stalled = 0;

    while (res.evaluations < opts.budget) {
        // (Re)build around the incumbent.
        simplex[0] = res.x.empty() ? x0 : res.x;
        fv[0] = best;
        for (std::size_t i = 0; i < d && res.evaluations < opts.budget; ++i) {
            simplex[i + 1] = simplex[0];
            simplex[i + 1][i] += opts.scale;
            fv[i + 1] = eval(simplex[i + 1]);
        }
        if (res.evaluations >= opts.budget) break;

        std::vector<std::size_t> order(d + 1);
        while (res.evaluations < opts.budget) {
            std::iota(order.begin(), order.end(), 0);
            std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });
            const std::size_t lo = order.front(), hi = order.back(), nh = order[d - 1];
            double spread = fv[hi] - fv[lo];
            double diam = 0.0;
            for (std::size_t i = 0; i <= d; ++i) {
                double s = 0.0;
                for (std::size_t j = 0; j < d; ++j) s += std::abs(simplex[i][j] - simplex[lo][j]);
                diam = std::max(diam, s);
            }
            if ((std::isfinite(spread) && spread <= opts.tol * (1.0 + std::abs(fv[lo]))) || diam <= 1e-13) break;

            std::fill(centroid.begin(), centroid.end(), 0.0);
            for (std::size_t i = 0; i <= d; ++i) {
                if (i == hi) continue;
                for (std::size_t j = 0; j < d; ++j) centroid[j] += simplex[i][j] / static_cast<double>(d);
            }
            for (std::size_t j = 0; j < d; ++j) trial[j] = centroid[j] + (centroid[j] - simplex[hi][j]);
            const double fr = eval(trial);
            if (fr < fv[lo]) {
                for (std::size_t j = 0; j < d; ++j) trial2[j] = centroid[j] + 2.0 * (centroid[j] - simplex[hi][j]);
                const double fe = eval(trial2);
                if (fe < fr) {
                    simplex[hi] = trial2;
                    fv[hi] = fe;
                } else {
                    simplex[hi] = trial;
                    fv[hi] = fr;
                }
            } else if (fr < fv[nh]) {
                simplex[hi] = trial;
                fv[hi] = fr;
            } else {
                const bool outside = fr < fv[hi];
                for (std::size_t j = 0; j < d; ++j) {
                    trial2[j] = outside ? centroid[j] + 0.5 * (trial[j] - centroid[j])
                                        : centroid[j] + 0.5 * (simplex[hi][j] - centroid[j]);
                }
                const double fc = eval(trial2);
                if (fc < std::min(fr, fv[hi])) {
                    simplex[hi] = trial2;
                    fv[hi] = fc;
                } else {
                    for (std::size_t i = 0; i <= d && res.evaluations < opts.budget; ++i) {
                        if (i == lo) continue;
                        for (std::size_t j = 0; j < d; ++j) {
                            simplex[i][j] = simplex[lo][j] + 0.5 * (simplex[i][j] - simplex[lo][j]);
                        }
                        fv[i] = eval(simplex[i]);
                    }
                }
            }
        }
        if (!first_round && round_start - best <= opts.tol * (1.0 + std::abs(best))) {
            if (++stalled >= 2) break;
        } else {
            stalled = 0;
        }
        first_round = false;
        round_start = best;
    }
    res.value = best;
    return res;
}

SearchResult minimize_ratio(const ClassSpec& spec, const SearchConfig& cfg, std::span<const Polynomial> warm_starts) {
    cfg.validate();
    if (spec.n < 1) throw InvalidArgument("minimize_ratio requires n >= 1");
    if (spec.n > kSearchDegreeCap) throw UnsupportedDegree(spec.n, kSearchDegreeCap);

    auto objective = [&](std::span<const double> u) { return fast_ratio_or_inf(embed(to_embed(u, spec), spec)); };
    const SimplexOptions opts{cfg.budget, cfg.simplex_scale, cfg.tol};

    SearchResult out;
    std::vector<Candidate> candidates;
    double running_best = kInf;
    auto absorb_trace = [&](const std::vector<TracePoint>& trace) {
        for (const auto& t : trace) {
            if (t.best < running_best) {
                running_best = t.best;
                out.trace.push_back({out.evaluations + t.evaluation, t.best});
            }
        }
    };
    auto run = [&](std::vector<double> x0, std::string origin) {
        auto res = nelder_mead(objective, std::move(x0), opts);
        absorb_trace(res.trace);
        out.evaluations += res.evaluations;
        ++out.restarts_used;
        if (std::isfinite(res.value)) {
            auto params = to_embed(res.x, spec);
            auto poly = embed(params, spec);
            candidates.push_back({res.value, std::move(poly), std::move(params), std::move(origin)});
        }
    };

    const int m = spec.constrained();
    for (int r = 0; r < cfg.restarts; ++r) {
        CounterRng rng(cfg.seed, static_cast<std::uint64_t>(r));
        std::vector<double> x0(static_cast<std::size_t>(spec.parameter_count()));
        for (int i = 0; i < spec.n; ++i) {
            auto& a = x0[2 * static_cast<std::size_t>(i)];
            auto& b = x0[2 * static_cast<std::size_t>(i) + 1];
            if (i == 0 && spec.pin_interval_zero) {
                a = rng.uniform(0.0, std::numbers::pi);
                b = 0.0;
                rng.next();
            } else if (i < m) {
                a = rng.uniform(0.0, std::numbers::pi);
                b = rng.uniform(0.0, std::numbers::pi);
            } else {
                a = rng.uniform(-1.5, 1.5);
                b = rng.uniform(-1.5, 1.5);
            }
        }
        run(std::move(x0), "restart " + std::to_string(r));
    }
    for (std::size_t i = 0; i < warm_starts.size(); ++i) {
        const auto& w = warm_starts[i];
        if (!is_member(w, spec) || !w.is_factored()) continue;
        const double v = fast_ratio_or_inf(w);
        std::vector<double> params;
        try {
            params = unembed(w, spec);
        } catch (const InvalidArgument&) {
            params.clear();
        }
        if (std::isfinite(v)) candidates.push_back({v, w, params, "warm start " + std::to_string(i)});
        if (!params.empty() && w.degree() == spec.n) run(from_embed(params, spec), "warm start " + std::to_string(i));
    }
    // Lower-degree witnesses the fixed-degree parametrization cannot reach.
    if (spec.pin_interval_zero && spec.n - spec.k <= 1) {
        for (double root : {1.0, -1.0}) {
            auto w = Polynomial::from_zeros(1.0, {Complex{root, 0.0}});
            candidates.push_back({fast_ratio_or_inf(w), w, {}, "witness"});
        }
    }
    if (candidates.empty()) throw SearchFailure("search: no feasible evaluation within the budget");

    Candidate best = candidates.front();
    for (const auto& c : candidates) {
        if (better(c, best)) best = c;
    }
    best = deflate(std::move(best), spec);

    out.best = best.poly;
    out.params = best.params;
    out.origin = best.origin;
    out.cached_ratio = best.value;
    out.ratio = turan_ratio(out.best, Interval{}, 1e-12);
    out.bracket = thm21_bracket(spec.n, spec.k, cfg.c1, cfg.c2);
    out.within_bracket = bracket_holds(out.ratio, out.bracket);
    return out;
}

SearchResult minimize_incomplete_ratio(int n, int k, IncompleteObjective objective, const SearchConfig& cfg) {
    cfg.validate();
    if (k < 1 || k > n - 1) throw InvalidArgument("minimize_incomplete_ratio requires 1 <= k <= n-1");
    if (n > kSearchDegreeCap) throw UnsupportedDegree(n, kSearchDegreeCap);

    const int a = n - k + 1;
    const int dim = k - 1;
    auto shape_of = [&](std::span<const double> x) {
        IncompleteShape q;
        q.a = a;
        q.cheb.assign(1, 1.0);
        q.cheb.insert(q.cheb.end(), x.begin(), x.end());
        return q;
    };
    auto f = [&](std::span<const double> x) { return incomplete_ratio(shape_of(x), objective, n); };
    const SimplexOptions opts{cfg.budget, cfg.simplex_scale, cfg.tol};

    SearchResult out;
    Candidate best;
    double running_best = kInf;
    const int restarts = dim == 0 ? 1 : cfg.restarts;
    for (int r = 0; r < restarts; ++r) {
        CounterRng rng(cfg.seed, static_cast<std::uint64_t>(r));
        std::vector<double> x0(static_cast<std::size_t>(dim));
        for (auto& v : x0) v = rng.uniform(-1.0, 1.0);
        auto res = nelder_mead(f, std::move(x0), opts);
        for (const auto& t : res.trace) {
            if (t.best < running_best) {
                running_best = t.best;
                out.trace.push_back({out.evaluations + t.evaluation, t.best});
            }
        }
        out.evaluations += res.evaluations;
        ++out.restarts_used;
        Candidate c{res.value, Polynomial{}, res.x, "restart " + std::to_string(r)};
        if (std::isfinite(c.value) && (!std::isfinite(best.value) || better(c, best))) {
            best = std::move(c);
        }
    }
    if (!std::isfinite(best.value)) throw SearchFailure("incomplete search: no feasible evaluation");

    // Q = x^a R as a factored polynomial, scaled so the denominator is 1.
    const auto shape = shape_of(best.params);
    const auto parts = incomplete_objective(shape, objective, n);
    auto rc = shape.power_coeffs();
    while (rc.size() > 1 && rc.back() == 0.0) rc.pop_back();
    std::vector<Complex> coeffs(rc.begin(), rc.end());
    std::vector<Complex> zeros(static_cast<std::size_t>(a), Complex{0.0, 0.0});
    for (const auto& z : polynomial_roots(coeffs)) zeros.push_back(z);
    auto q = Polynomial::from_zeros(coeffs.back(), std::move(zeros));
    q = q.scaled(1.0 / parts.denom);

    const Interval unit(0.0, 1.0);
    const auto num = sup_norm(derivative(q), unit, 1e-12);
    CertifiedValue den;
    switch (objective) {
        case IncompleteObjective::value_at_one: {
            den.value = std::abs(q(1.0));
            den.err = 1e-15 * den.value * n;
            break;
        }
        case IncompleteObjective::total_variation: den = total_variation(q, unit); break;
        case IncompleteObjective::sup_norm: den = sup_norm(q, unit, 1e-12); break;
    }
    out.best = q;
    out.params = best.params;
    out.origin = best.origin;
    out.cached_ratio = best.value;
    out.ratio.value = num.value / den.value;
    out.ratio.err = (num.err + out.ratio.value * den.err) / (den.value - den.err) + 4e-16 * out.ratio.value;
    out.ratio.method = num.method;
    out.ratio.argmax = num.argmax;
    out.bracket = lemma34_bracket(n, k);
    out.within_bracket = bracket_holds(out.ratio, out.bracket);
    return out;
}

std::optional<double> loglog_slope(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2) return std::nullopt;
    double sx = 0.0, sy = 0.0;
    const double n = static_cast<double>(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] > 0.0) || !(y[i] > 0.0)) return std::nullopt;
        sx += std::log(x[i]);
        sy += std::log(y[i]);
    }
    const double mx = sx / n, my = sy / n;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = std::log(x[i]) - mx;
        sxx += dx * dx;
        sxy += dx * (std::log(y[i]) - my);
    }
    if (sxx == 0.0) return std::nullopt;
    return sxy / sxx;
}

SweepTable frontier_sweep(std::span<const int> n_values, std::span<const int> k_values, const SearchConfig& cfg) {
    cfg.validate();
    std::vector<int> ns(n_values.begin(), n_values.end()), ks(k_values.begin(), k_values.end());
    std::sort(ns.begin(), ns.end());
    ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
    std::sort(ks.begin(), ks.end());
    ks.erase(std::unique(ks.begin(), ks.end()), ks.end());

    SweepTable table;
    for (int n : ns) {
        std::optional<Polynomial> previous;
        for (int k : ks) {
            SweepCell cell;
            cell.n = n;
            cell.k = k;
            try {
                const ClassSpec spec(n, k, true);
                cell.lower_bound = thm21_bracket(n, k).lower;
                std::vector<Polynomial> warm;
                if (previous) warm.push_back(*previous);
                for (const auto& c : constructions_for(n, k, cfg)) {
                    if (!cell.upper_construction || c.ratio.value < *cell.upper_construction) {
                        cell.upper_construction = c.ratio.value;
                    }
                    warm.push_back(c.p);
                }
                cell.result = minimize_ratio(spec, cfg, warm);
                cell.ok = true;
                previous = cell.result->best;
            } catch (const Error& e) {
                cell.ok = false;
                cell.error = e.what();
            }
            table.cells.push_back(std::move(cell));
        }
    }

    std::vector<double> xs, ys;
    for (const auto& c : table.cells) {
        if (!c.ok) continue;
        xs.push_back(static_cast<double>(c.n) / (c.k + 1));
        ys.push_back(c.result->ratio.value);
    }
    table.slope = loglog_slope(xs, ys);

    const double trend_tol = 1e-9;
    for (int n : ns) {
        std::vector<double> vals;
        std::optional<std::pair<int, double>> prev;
        for (const auto& c : table.cells) {
            if (c.n != n || !c.ok) continue;
            const double v = c.result->ratio.value;
            if (prev && v > prev->second + trend_tol * std::max(1.0, prev->second)) {
                table.k_monotonicity_violations.emplace_back(n, c.k);
            }
            prev = std::make_pair(c.k, v);
            vals.push_back(v);
        }
        table.trend_in_k.emplace_back(n, classify(vals, trend_tol));
    }
    for (int k : ks) {
        std::vector<double> vals;
        for (const auto& c : table.cells) {
            if (c.k == k && c.ok) vals.push_back(c.result->ratio.value);
        }
        table.trend_in_n.emplace_back(k, classify(vals, trend_tol));
    }
    return table;
}

}  // namespace turan
