#pragma once

#include <string>
#include <vector>

#include "turanlab/polynomial.hpp"
#include "turanlab/supnorm.hpp"

namespace turan {

// Lebesgue measure of a logarithmic-derivative level set inside an ambient
// interval, compared against a lemma's bound.
struct LevelSetReport {
    CertifiedValue measure;
    double bound = 0.0;
    double parameter = 0.0;  // delta or alpha
    bool satisfied = false;
    bool strict = false;     // whether the comparison with bound is strict
    Interval ambient;
    std::vector<Interval> intervals;
};

// Degree cap for the level-set operations (|Q'|^2 - c^2 |Q|^2 has degree 2 deg Q).
inline constexpr int kLevelSetDegreeCap = 30;

// The set {x in ambient : s * (|P'(x)|^2 - c^2 |P(x)|^2) >= 0} with s = +1,
// or <= 0 with s = -1, as a union of closed intervals. Boundaries come from
// the zeros of the division-free polynomial; membership of each piece is
// decided by the sign at its midpoint.
std::vector<Interval> logderiv_level_set(const Polynomial& p, double c, bool large, const Interval& ambient,
                                         double& boundary_err);

// E_delta = {x : |Q'/Q| <= n delta}, n = deg Q, Q with all zeros in D+.
// Bound 70 e delta, strict.
LevelSetReport small_logderiv_measure(const Polynomial& q, double delta, const Interval& ambient = {});

// F_alpha = {x : |R'/R| >= alpha} restricted to the ambient interval.
// Bound 8 sqrt(2) k / alpha with k = deg R, non-strict.
LevelSetReport large_logderiv_measure(const Polynomial& r, double alpha, const Interval& ambient = {});

enum class DecayStatus { satisfied, violated, vacuous };

const char* to_string(DecayStatus s) noexcept;

struct DecayReport {
    DecayStatus status = DecayStatus::vacuous;
    double max_violation = 0.0;  // <= 0 when satisfied (incomplete check)
    Interval window;             // tested sub-interval of [0, 1]
    double restricted_sup = 0.0; // flipped check only
    double full_sup = 0.0;       // flipped check only
};

// |S(x)| <= x^((n-k)/2) ||S||_[0,1] on [0, 1 - 10k/(n-k)], for S = x^(n-k) R,
// deg R <= k, 1 <= k <= n-1. Sampled at 10^4 points.
DecayReport incomplete_decay_check(const Polynomial& s, int n, int k);

// sup over [10(2k+1)/n, 1] of |y^(1/2) W(y)| < sup over [0, 1], for
// W = (1-x)^(n-k) V, deg V <= k, 1 <= k <= n/2. Compared through x W(x)^2.
DecayReport flipped_decay_check(const Polynomial& w, int n, int k);

// Mean-value neighbourhood: with M = ||P'||/||P|| and x0 the leftmost
// maximizer, min over sampled y in [x0 - 1/(2M), x0 + 1/(2M)] of
// |P(y)| - ||P|| / 2. Non-negative when the property holds.
struct NeighbourhoodReport {
    double ratio = 0.0;
    double x0 = 0.0;
    double radius = 0.0;
    double norm = 0.0;
    double min_margin = 0.0;
};
NeighbourhoodReport mean_value_neighbourhood(const Polynomial& p, int samples = 2001);

// Balancing step of the lower-bound argument for P = Q R with deg Q = n - k,
// deg R = k: with delta = sqrt(2k/(n-k)), points of [-1,1] outside
// E_delta (threshold (n-k) delta) and F (threshold k / delta) satisfy
// |P'/P| >= sqrt((n-k) k / 2). Reports the worst sampled quotient.
struct BalancingReport {
    int n = 0;
    int k = 0;
    double delta = 0.0;
    double threshold = 0.0;       // sqrt((n-k) k / 2)
    double min_quotient = 0.0;    // min |P'/P| / threshold over sampled points outside H
    double covered_measure = 0.0; // m(E_delta) + m(F)
    int samples_outside = 0;
};
BalancingReport balancing_check(const Polynomial& q, const Polynomial& r, int samples = 4001);

}  // namespace turan
