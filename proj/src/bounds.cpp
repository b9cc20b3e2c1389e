#include "turanlab/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "turanlab/errors.hpp"

namespace turan {

namespace {

constexpr int kThm22Threshold = 163000;

}  // namespace

double komarov_constant() noexcept { return 2.0 / (3.0 * std::sqrt(210.0 * std::numbers::e)); }

const char* to_string(BoundSource s) noexcept {
    switch (s) {
        case BoundSource::turan11: return "turan11";
        case BoundSource::komarov: return "komarov";
        case BoundSource::thm22: return "thm22";
        case BoundSource::cor23: return "cor23";
        case BoundSource::thm21: return "thm21";
        case BoundSource::lemma34_lower: return "lemma34-lower";
        case BoundSource::lemma34_upper: return "lemma34-upper";
    }
    return "unknown";
}

CertifiedValue turan_ratio(const Polynomial& p, const Interval& interval, double tol) {
    if (p.is_zero()) throw InvalidArgument("turan_ratio: the zero polynomial has no ratio");
    const auto den = sup_norm(p, interval, tol);
    const auto dp = derivative(p);
    const auto num = dp.is_zero() ? CertifiedValue{} : sup_norm(dp, interval, tol);

    CertifiedValue out;
    out.method = den.method;
    if (den.value <= den.err) {
        throw NumericOverflow("turan_ratio: ||P|| is indistinguishable from zero on the interval");
    }
    out.value = num.value / den.value;
    out.err = (num.err + out.value * den.err) / (den.value - den.err) + 4e-16 * out.value;
    out.argmax = num.argmax;
    return out;
}

double turan_lower(int n) {
    if (n < 0) throw InvalidArgument("turan_lower: n must be nonnegative");
    return std::sqrt(static_cast<double>(n)) / 6.0;
}

double komarov_lower(int n) {
    if (n < 0) throw InvalidArgument("komarov_lower: n must be nonnegative");
    return komarov_constant() * std::sqrt(static_cast<double>(n));
}

double thm22_lower(int n, int k) {
    if (k < 1 || static_cast<long long>(k) * kThm22Threshold > n) {
        throw OutOfRegime("thm22_lower requires 1 <= k <= n/163000 (got n = " + std::to_string(n) +
                          ", k = " + std::to_string(k) + ")");
    }
    return std::sqrt(static_cast<double>(n - k) / (8.0 * k)) / 202.0;
}

double cor23_lower(int n, int k) {
    if (k < 1 || k > n) {
        throw InvalidArgument("cor23_lower requires 1 <= k <= n; for k = 0 use komarov_lower");
    }
    return std::max(0.5, std::sqrt(static_cast<double>(n - k) / k) / 808.0);
}

BoundBracket thm21_bracket(int n, int k, std::optional<double> c1, std::optional<double> c2) {
    if (k < 0 || k > n) throw InvalidArgument("thm21_bracket requires 0 <= k <= n");
    if ((c1 && !(*c1 > 0.0)) || (c2 && !(*c2 > 0.0))) {
        throw InvalidArgument("thm21_bracket: constants must be positive");
    }
    const double scale = std::sqrt(static_cast<double>(n) / (k + 1));
    BoundBracket b;
    b.source = BoundSource::thm21;
    if (c1) {
        b.lower = *c1 * scale;
    } else if (k == 0) {
        b.lower = std::max(0.5, komarov_lower(n));
    } else {
        b.lower = cor23_lower(n, k);
    }
    if (c2) b.upper = std::max(b.lower, *c2 * scale);
    return b;
}

BoundBracket lemma34_bracket(int n, int k, double c4) {
    if (k < 1 || k > n - 1) throw InvalidArgument("lemma34_bracket requires 1 <= k <= n-1");
    BoundBracket b;
    b.source = BoundSource::lemma34_lower;
    b.lower = static_cast<double>(n - k) / (12.0 * k);
    b.upper = c4 * static_cast<double>(n) / k;
    return b;
}

bool bracket_holds(const CertifiedValue& ratio, const BoundBracket& b) noexcept {
    if (ratio.upper() < b.lower) return false;
    if (b.upper && ratio.lower() > *b.upper) return false;
    return true;
}

bool Verdict::all_pass() const noexcept {
    return std::all_of(checks.begin(), checks.end(), [](const BracketCheck& c) { return c.pass; });
}

Verdict evaluate_verdict(const Polynomial& p, const ClassSpec& spec) {
    auto membership = is_member(p, spec);
    if (!membership) throw PreconditionViolation("evaluate_verdict: not a member of F_{n,k}: " + membership.reason);

    Verdict v;
    v.n = spec.n;
    v.k = spec.k;
    v.ratio = turan_ratio(p);
    auto add = [&](BoundSource src, double lower) {
        BoundBracket b;
        b.source = src;
        b.lower = lower;
        v.checks.push_back({b, bracket_holds(v.ratio, b)});
    };

    const int deg = p.degree();
    const auto zeros = p.is_factored() ? std::vector<Complex>(p.zeros().begin(), p.zeros().end())
                                       : std::vector<Complex>{};
    const bool all_real_unit = p.is_factored() && deg >= 1 &&
                               std::all_of(zeros.begin(), zeros.end(),
                                           [&](Complex z) { return on_unit_interval(z, spec.geom_tol); });
    if (all_real_unit) add(BoundSource::turan11, turan_lower(deg));
    if (spec.k == 0 && deg >= 1) add(BoundSource::komarov, komarov_lower(deg));
    if (spec.k >= 1 && static_cast<long long>(spec.k) * kThm22Threshold <= spec.n) {
        add(BoundSource::thm22, thm22_lower(spec.n, spec.k));
    }
    if (spec.k >= 1 && membership.interval_zero) add(BoundSource::cor23, cor23_lower(spec.n, spec.k));
    return v;
}

}  // namespace turan
