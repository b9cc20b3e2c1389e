#pragma once

#include <limits>
#include <vector>

#include "turanlab/polynomial.hpp"

namespace turan {

enum class NormMethod { critical_points, certified_grid };

const char* to_string(NormMethod m) noexcept;

// A value whose true counterpart lies in [value - err, value + err].
struct CertifiedValue {
    double value = 0.0;
    double err = 0.0;
    NormMethod method = NormMethod::critical_points;
    // Leftmost point attaining the sup (sup_norm only; NaN otherwise).
    double argmax = std::numeric_limits<double>::quiet_NaN();

    double lower() const noexcept { return value - err; }
    double upper() const noexcept { return value + err; }
};

struct RootList {
    std::vector<double> roots;       // strictly increasing
    std::vector<double> residuals;   // |G(root)|
    std::vector<int> multiplicities; // estimates; >1 for merged clusters and touching roots
};

// ||P||_I. Degree <= kExpansionCap uses exact critical-point enumeration of
// |P|^2; above it (or when the critical points fail their residual check) a
// branch-and-bound grid certified by the Markov bound ||P'||_I <= 2 n^2 / |I| ||P||_I.
CertifiedValue sup_norm(const Polynomial& p, const Interval& interval = {}, double tol = 1e-12);
CertifiedValue sup_norm(const Polynomial& p, const Interval& interval, double tol, NormMethod method);

// Real roots of G in the interval, each bracketed to width <= tol. Isolation
// recurses on the roots of G', which split the interval into monotone
// pieces; each sign change is then bisected. Roots closer than 1e-9 merge.
RootList real_roots(const RealPolynomial& g, const Interval& interval = {}, double tol = 1e-12);

// Real critical points of |P| inside the interval (candidates for its
// extrema), ascending. Uses the factored form; no expansion.
std::vector<double> modulus_critical_points(const Polynomial& p, const Interval& interval);

// V_a^b(P) = int |P'| for P real-valued on the interval, by splitting at the
// critical points of P.
CertifiedValue total_variation(const Polynomial& p, const Interval& interval = {});

}  // namespace turan
