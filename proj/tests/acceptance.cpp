// Acceptance suite: one line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>

#include "oracles.hpp"
#include "turanlab/bounds.hpp"
#include "turanlab/classes.hpp"
#include "turanlab/constructions.hpp"
#include "turanlab/levelsets.hpp"
#include "turanlab/search.hpp"
#include "turanlab/supnorm.hpp"

using namespace turan;
using oracle::C;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

int failures = 0;

void criterion(int id, const char* name, double limit_seconds, const std::function<Outcome()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o.pass = false;
        o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs < limit_seconds;
    const bool pass = o.pass && in_time;
    if (!pass) ++failures;
    std::printf("criterion %2d %s  %s: %s [%.1fs of %.0fs%s]\n", id, pass ? "PASS" : "FAIL", name, o.detail.c_str(),
                secs, limit_seconds, in_time ? "" : ", too slow");
    std::fflush(stdout);
}

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, a, b, c);
    return buf;
}

Outcome turan_suite() {
    oracle::Gen gen(1001);
    Outcome o;
    double worst = 1e300;
    for (int i = 0; i < 200; ++i) {
        const int n = gen.integer(1, 30);
        const auto r = turan_ratio(Polynomial::from_zeros(1.0, gen.real_zeros(n)));
        const double margin = r.value - (std::sqrt(n) / 6.0 - 1e-9);
        worst = std::min(worst, margin / (std::sqrt(n) / 6.0));
        if (margin < 0.0) o.pass = false;
    }
    o.detail = fmt("200 real-rooted polynomials, min (ratio - sqrt(n)/6)/(sqrt(n)/6) = %.4g", worst);
    return o;
}

Outcome komarov_suite() {
    Outcome o;
    double worst = 1e300;
    for (int i = 0; i < 200; ++i) {
        const int n = 1 + i % 30;
        const auto r = turan_ratio(sample(ClassSpec(n, 0), 2000 + i));
        const double bound = 0.0279 * std::sqrt(n);
        worst = std::min(worst, r.value / bound);
        if (r.value < bound) o.pass = false;
    }
    o.detail = fmt("200 members of F(n,0), min ratio / (0.0279 sqrt(n)) = %.4g", worst);
    return o;
}

Outcome corollary_suite() {
    oracle::Gen gen(1003);
    Outcome o;
    double worst = 1e300;
    for (int i = 0; i < 500; ++i) {
        const int n = gen.integer(1, 30);
        const int k = gen.integer(1, n);
        const auto r = turan_ratio(sample(ClassSpec(n, k, true), 3000 + i));
        const double bound = std::max(0.5, std::sqrt(static_cast<double>(n - k) / k) / 808.0);
        worst = std::min(worst, r.value - bound);
        if (r.value < bound - 1e-9) o.pass = false;
    }
    const double w = turan_ratio(Polynomial::from_zeros(1.0, {1.0})).value;
    if (std::abs(w - 0.5) > 1e-9) o.pass = false;
    o.detail = fmt("500 pinned members, min (ratio - bound) = %.4g; ratio(x-1) - 1/2 = %.3g", worst, w - 0.5);
    return o;
}

Outcome lemma31_suite() {
    Outcome o;
    double margin = 1e300;
    for (int i = 0; i < 500; ++i) {
        const int n = 4 + i % 27;
        const double delta = 0.05 * std::pow(2.0, i % 5);
        const auto r = small_logderiv_measure(sample(ClassSpec(n, 0), 4000 + i), delta);
        margin = std::min(margin, r.bound - r.measure.upper());
        if (!(r.measure.upper() < r.bound)) o.pass = false;
    }
    o.detail = fmt("500 (Q, delta) pairs, min strictness margin 70e delta - m(E) = %.4g", margin);
    return o;
}

Outcome lemma32_suite() {
    oracle::Gen gen(1005);
    Outcome o;
    double margin = 1e300;
    for (int i = 0; i < 500; ++i) {
        const int k = gen.integer(1, 10);
        std::vector<C> z;
        for (int j = 0; j < k; ++j) z.push_back(gen.in_square(2.0));
        const double alpha = std::pow(10.0, 3.0 * (i % 10) / 9.0);
        const auto r = large_logderiv_measure(Polynomial::from_zeros(1.0, z), alpha);
        margin = std::min(margin, r.bound - r.measure.value);
        if (r.measure.value > r.bound + 1e-9) o.pass = false;
    }
    o.detail = fmt("500 (R, alpha) pairs, min 8 sqrt(2) k/alpha - m(F) = %.4g", margin);
    return o;
}

Outcome thm24_suite() {
    Outcome o;
    SearchConfig cfg;
    cfg.budget = 4000;
    cfg.restarts = 8;
    std::vector<double> xs, ys;
    std::vector<double> per_k;
    int members = 0, total = 0;
    for (int k : {1, 2}) {
        std::vector<double> kx, ky;
        for (int n = 4; n <= 30; n += 2) {
            const auto rep = thm24_construct(n, k, cfg);
            ++total;
            if (is_member(rep.p, ClassSpec(2 * n, 2 * k)).member) ++members;
            kx.push_back(static_cast<double>(n) / k);
            ky.push_back(rep.ratio.value);
        }
        per_k.push_back(loglog_slope(kx, ky).value_or(NAN));
        xs.insert(xs.end(), kx.begin(), kx.end());
        ys.insert(ys.end(), ky.begin(), ky.end());
    }
    const auto slope = loglog_slope(xs, ys);
    o.pass = slope && *slope >= 0.35 && *slope <= 0.65 && members == total;
    o.detail = fmt("slope %.4f over %.0f constructions, %.0f members of F(2n,2k)", slope.value_or(NAN), total, members) +
               fmt(" (per-k slopes: k=1 %.4f, k=2 %.4f)", per_k[0], per_k[1]);
    return o;
}

Outcome remark_suite() {
    Outcome o;
    double worst_arg = 0.0, worst_bound = -1e300;
    for (int n = 1; n <= 12; ++n) {
        const auto rep = remark_family(0.3, n);
        worst_arg = std::max(worst_arg, std::abs(*rep.maximizer - *rep.predicted_maximizer));
        worst_bound = std::max(worst_bound, rep.ratio.value - rep.predicted_bound);
        if (*rep.m != 4) o.pass = false;
    }
    if (worst_arg > 1e-6 || worst_bound > 0.0) o.pass = false;
    o.detail = fmt("n = 1..12, max |a - closed form| = %.3g, max (ratio - bound) = %.4g", worst_arg, worst_bound);
    return o;
}

Outcome oracle_suite() {
    oracle::Gen gen(1008);
    Outcome o;
    const long points = 1000000;
    const double h = 2.0 / (points - 1);
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
        const int n = gen.integer(1, 20);
        const auto z = gen.zeros_in_disk(n, 2.0);
        const auto v = sup_norm(Polynomial::from_zeros(1.0, z), Interval{}, 1e-10);
        const double g = oracle::grid_max([&](double x) { return std::abs(oracle::eval(1.0, z, x)); }, -1, 1, points);
        // Grid resolution: |P| is n^2 ||P||-Lipschitz on [-1, 1], so the grid misses at most that times h/2.
        const double resolution = n * n * v.value * h / 2.0;
        if (v.value + v.err < g - 1e-9 || v.value - v.err > g + resolution + 1e-9) o.pass = false;
        worst = std::max(worst, std::abs(v.value - g) / (resolution + 1e-9));
    }
    double tv_worst = 0.0;
    for (int i = 0; i < 50; ++i) {
        // Real coefficients: real zeros and conjugate pairs.
        std::vector<C> z;
        const int pairs = gen.integer(0, 5), reals = gen.integer(1, 8);
        for (int j = 0; j < pairs; ++j) {
            const C w = gen.in_disk(2.0);
            z.push_back(w);
            z.push_back(std::conj(w));
        }
        for (int j = 0; j < reals; ++j) z.push_back({gen.uniform(-2.0, 2.0), 0.0});
        const double lead = gen.uniform(0.5, 2.0);
        const auto tv = total_variation(Polynomial::from_zeros(lead, z));
        const double q = oracle::simpson([&](double x) { return std::abs(oracle::eval_deriv(lead, z, x)); }, -1, 1,
                                         1e-12 * std::max(1.0, tv.value));
        const double rel = std::abs(tv.value - q) / q;
        tv_worst = std::max(tv_worst, rel);
        if (rel > 1e-6) o.pass = false;
    }
    o.detail = fmt("200 sup norms, max |diff| / grid bound = %.3g; 50 total variations, max rel diff = %.3g", worst,
                   tv_worst);
    return o;
}

Outcome search_suite() {
    Outcome o;
    SearchConfig small;
    small.budget = 5000;
    small.restarts = 8;
    small.seed = 7;
    const auto one = minimize_ratio(ClassSpec(1, 0, true), small);
    if (std::abs(one.ratio.value - 0.5) > 1e-6) o.pass = false;

    const int ns[] = {2, 4, 8, 16};
    const int ks[] = {0};
    const auto table = frontier_sweep(ns, ks, SearchConfig{});
    std::string cells;
    for (const auto& c : table.cells) {
        if (!c.ok) {
            o.pass = false;
            cells += " n=" + std::to_string(c.n) + " failed";
            continue;
        }
        const double f = c.result->ratio.value;
        const double lo = 0.0279 * std::sqrt(c.n);
        const double hi = c.upper_construction.value_or(INFINITY);
        if (f + c.result->ratio.err < lo || f > hi + 1e-9) o.pass = false;
        cells += fmt(" f(%.0f)=%.5f<=%.5f", c.n, f, hi);
    }
    const double slope = table.slope.value_or(NAN);
    if (!(slope >= 0.35 && slope <= 0.65)) o.pass = false;
    o.detail = fmt("f(1,0) = %.9f, sweep slope %.4f;", one.ratio.value, slope) + cells;
    return o;
}

Outcome proof_suite() {
    oracle::Gen gen(1010);
    Outcome o;
    double worst = 1e300;
    int tested = 0;
    for (int i = 0; i < 100; ++i) {
        const int nk = gen.integer(2, 30);
        const int k = gen.integer(1, 10);
        const auto q = sample(ClassSpec(nk, 0), 5000 + i);
        std::vector<C> rz;
        for (int j = 0; j < k; ++j) rz.push_back(gen.in_square(2.0));
        const auto rep = balancing_check(q, Polynomial::from_zeros(1.0, rz));
        if (rep.samples_outside == 0) continue;
        ++tested;
        worst = std::min(worst, rep.min_quotient);
        if (rep.min_quotient < 1.0 - 1e-6) o.pass = false;
    }
    const double c = 70.0 * std::numbers::e + 8.0 * std::sqrt(2.0);
    int grid = 0;
    for (long n = 163000; n <= 163000L * 100000; n = n * 3 / 2 + 1) {
        for (long k = 1; k <= n / 163000; k = k * 2 + 1) {
            ++grid;
            if (!(c * std::sqrt(4.0 * k / static_cast<double>(n)) < 1.0)) o.pass = false;
        }
    }
    o.detail = fmt("%.0f instances with points outside E u F, min |P'/P| / threshold = %.4f; %.0f regime cells checked",
                   tested, worst, grid);
    return o;
}

}  // namespace

int main() {
    criterion(1, "Turan sqrt(n)/6", 30, turan_suite);
    criterion(2, "A sqrt(n) floor", 30, komarov_suite);
    criterion(3, "cor23 floor", 120, corollary_suite);
    criterion(4, "lemma31 measure", 120, lemma31_suite);
    criterion(5, "lemma32 measure", 120, lemma32_suite);
    criterion(6, "thm24 scaling", 300, thm24_suite);
    criterion(7, "remark maximizer", 30, remark_suite);
    criterion(8, "sup-norm oracle", 120, oracle_suite);
    criterion(9, "search bracket", 600, search_suite);
    criterion(10, "proof machinery", 60, proof_suite);
    std::printf("%d of 10 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
