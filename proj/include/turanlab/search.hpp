#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "turanlab/bounds.hpp"
#include "turanlab/classes.hpp"
#include "turanlab/polynomial.hpp"
#include "turanlab/supnorm.hpp"

namespace turan {

inline constexpr int kSearchDegreeCap = 30;

struct SearchConfig {
    long budget = 20000;  // objective evaluations per restart
    int restarts = 32;
    std::uint64_t seed = 0;
    double simplex_scale = 0.3;
    double tol = 1e-10;
    // Optional constants for the thm21 bracket.
    std::optional<double> c1;
    std::optional<double> c2;

    void validate() const;
};

struct TracePoint {
    long evaluation = 0;
    double best = 0.0;
};

struct SearchResult {
    Polynomial best;
    CertifiedValue ratio;       // re-verified at tol 1e-12
    double cached_ratio = 0.0;  // optimizer's own value for `best`
    BoundBracket bracket;
    std::vector<TracePoint> trace;
    bool within_bracket = false;
    int restarts_used = 0;
    long evaluations = 0;
    std::vector<double> params;  // empty when the best came from a witness
    std::string origin;          // "restart <i>", "warm start <i>", "witness", "deflated"
};

// ---- objective evaluation --------------------------------------------------

// Sampled-and-refined sup norms of P and P' on [-1, 1]. Agrees with the
// certified sup_norm to ~1e-10 relative for degree <= 30.
struct FastNorms {
    double norm = 0.0;
    double deriv_norm = 0.0;
    double ratio() const noexcept { return deriv_norm / norm; }
};
FastNorms fast_norms(const Polynomial& p);

// ---- Nelder-Mead -----------------------------------------------------------

struct SimplexOptions {
    long budget = 20000;
    double scale = 0.3;
    double tol = 1e-10;
};

struct SimplexResult {
    std::vector<double> x;
    double value = 0.0;
    long evaluations = 0;
    std::vector<TracePoint> trace;
};

// Restarted Nelder-Mead simplex descent. When the simplex collapses before
// the budget is spent it is rebuilt around the incumbent; the run stops once
// a rebuild no longer improves by more than tol.
SimplexResult nelder_mead(const std::function<double(std::span<const double>)>& f, std::vector<double> x0,
                          const SimplexOptions& opts);

// ---- searches --------------------------------------------------------------

// Estimate of f(n,k) = min ||P'|| / ||P|| over members of F_{n,k} (with the
// requested pin flag). Warm starts are extra members whose parameters seed
// additional descents; they also count as candidates themselves.
SearchResult minimize_ratio(const ClassSpec& spec, const SearchConfig& cfg,
                            std::span<const Polynomial> warm_starts = {});

enum class IncompleteObjective { value_at_one, total_variation, sup_norm };

const char* to_string(IncompleteObjective o) noexcept;

// min over Q = x^(n-k+1) R, deg R <= k-1 real, of ||Q'||_[0,1] / D(Q) with
// D one of |Q(1)|, V_0^1(Q), ||Q||_[0,1]. R is parametrized by its
// coefficients in the Chebyshev basis of [0,1]; the returned Q is scaled so
// that D(Q) = 1.
SearchResult minimize_incomplete_ratio(int n, int k, IncompleteObjective objective, const SearchConfig& cfg);

struct SweepCell {
    int n = 0;
    int k = 0;
    bool ok = false;
    std::string error;
    std::optional<SearchResult> result;
    double lower_bound = 0.0;
    std::optional<double> upper_construction;
};

enum class Trend { increasing, decreasing, flat, mixed, undetermined };

const char* to_string(Trend t) noexcept;

struct SweepTable {
    std::vector<SweepCell> cells;  // ordered by (n, k)
    std::optional<double> slope;   // least-squares slope of log f vs log(n/(k+1))
    // Per fixed n: trend of f in k; per fixed k: trend of f in n.
    std::vector<std::pair<int, Trend>> trend_in_k;
    std::vector<std::pair<int, Trend>> trend_in_n;
    // Cells with f(n, k_next) > f(n, k) + tol, which class nesting forbids.
    std::vector<std::pair<int, int>> k_monotonicity_violations;
};

// Grid of minimize_ratio results over pinned classes. Each cell is warm
// started with the known members it dominates: the cell (n, k') for the
// previous k' < k, and the explicit constructions that land in F_{n,k}.
SweepTable frontier_sweep(std::span<const int> n_values, std::span<const int> k_values, const SearchConfig& cfg);

// Least-squares slope of log y against log x.
std::optional<double> loglog_slope(std::span<const double> x, std::span<const double> y);

}  // namespace turan
