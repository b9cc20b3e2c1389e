#pragma once

#include <optional>
#include <vector>

#include "turanlab/classes.hpp"
#include "turanlab/polynomial.hpp"
#include "turanlab/supnorm.hpp"

namespace turan {

// A = 2 / (3 sqrt(210 e)) = 0.0279...
double komarov_constant() noexcept;

enum class BoundSource { turan11, komarov, thm22, cor23, thm21, lemma34_lower, lemma34_upper };

const char* to_string(BoundSource s) noexcept;

// [lower, upper]; a missing upper means unbounded, never +inf.
struct BoundBracket {
    double lower = 0.0;
    std::optional<double> upper;
    BoundSource source = BoundSource::thm21;

    bool bounded() const noexcept { return upper.has_value(); }
};

// ||P'||_I / ||P||_I with the error radii of both norms propagated.
CertifiedValue turan_ratio(const Polynomial& p, const Interval& interval = {}, double tol = 1e-12);

// sqrt(n) / 6, for degree-n polynomials with all zeros in [-1, 1].
double turan_lower(int n);
// A sqrt(n), for degree-n polynomials with all zeros in D+.
double komarov_lower(int n);
// (1/202) sqrt((n-k)/(8k)); requires 1 <= k <= n/163000.
double thm22_lower(int n, int k);
// max(1/2, (1/808) sqrt((n-k)/k)); requires 1 <= k <= n.
double cor23_lower(int n, int k);

// [c1 sqrt(n/(k+1)), c2 sqrt(n/(k+1))]. Without c1 the lower end is the
// explicit bound available for the class: max(1/2, A sqrt(n)) for k = 0 and
// cor23_lower(n, k) for k >= 1. Without c2 the bracket is unbounded above.
BoundBracket thm21_bracket(int n, int k, std::optional<double> c1 = std::nullopt,
                           std::optional<double> c2 = std::nullopt);

// [(n-k)/(12k), c4 n/k] for min over P_{n-k,k} of ||P'||_[0,1] / V_0^1(P).
BoundBracket lemma34_bracket(int n, int k, double c4 = 1.0);

struct BracketCheck {
    BoundBracket bracket;
    bool pass = false;
};

// pass <=> ratio.upper() >= lower and, when bounded, ratio.lower() <= upper.
bool bracket_holds(const CertifiedValue& ratio, const BoundBracket& b) noexcept;

struct Verdict {
    CertifiedValue ratio;
    std::vector<BracketCheck> checks;
    int n = 0;
    int k = 0;

    bool all_pass() const noexcept;
};

// Turan ratio of a member of F_{n,k} checked against every bound whose
// hypotheses it satisfies.
Verdict evaluate_verdict(const Polynomial& p, const ClassSpec& spec);

}  // namespace turan
