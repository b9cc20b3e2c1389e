#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "turanlab/bounds.hpp"
#include "turanlab/errors.hpp"

using namespace turan;
using oracle::C;

namespace {

double oracle_ratio(C lead, const std::vector<C>& z) {
    const double dn = oracle::grid_max([&](double x) { return std::abs(oracle::eval_deriv(lead, z, x)); }, -1, 1, 1000001);
    const double pn = oracle::grid_max([&](double x) { return std::abs(oracle::eval(lead, z, x)); }, -1, 1, 1000001);
    return dn / pn;
}

}  // namespace

TEST_CASE("turan_ratio examples") {
    CHECK(turan_ratio(Polynomial::from_zeros(1.0, {0.0})).value == doctest::Approx(1.0).epsilon(1e-14));

    std::vector<C> z{1.0, 1.0, -1.0, -1.0};
    auto r = turan_ratio(Polynomial::from_zeros(1.0, z));
    CHECK(r.value == doctest::Approx(8.0 / (3.0 * std::sqrt(3.0))).epsilon(1e-12));
    CHECK(r.value == doctest::Approx(oracle_ratio(1.0, z)).epsilon(1e-9));

    auto h = turan_ratio(Polynomial::from_zeros(1.0, {1.0}));
    CHECK(h.value == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(h.err <= 1e-12);

    CHECK_THROWS_AS(turan_ratio(Polynomial::zero()), InvalidArgument);
}

TEST_CASE("thm22_lower examples") {
    CHECK(thm22_lower(163000, 1) == doctest::Approx(std::sqrt(162999.0 / 8.0) / 202.0));
    CHECK(thm22_lower(163000, 1) == doctest::Approx(0.7066).epsilon(1e-4));
    CHECK(thm22_lower(326000, 2) == doctest::Approx(0.7066).epsilon(1e-4));
    try {
        thm22_lower(100, 1);
        FAIL("expected OutOfRegime");
    } catch (const OutOfRegime& e) {
        CHECK(std::string(e.what()).find("163000") != std::string::npos);
    }
    CHECK_THROWS_AS(thm22_lower(163000, 0), OutOfRegime);
}

TEST_CASE("cor23_lower examples") {
    for (int n = 1; n < 50; ++n) CHECK(cor23_lower(n, n) == 0.5);
    CHECK(cor23_lower(808 * 808 + 1, 1) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(cor23_lower(10, 2) == 0.5);
    CHECK_THROWS_AS(cor23_lower(10, 0), InvalidArgument);
}

TEST_CASE("thm21_bracket examples") {
    auto b = thm21_bracket(4, 0, 0.0279);
    CHECK(b.lower == doctest::Approx(0.0558).epsilon(1e-12));
    CHECK_FALSE(b.bounded());
    CHECK(b.source == BoundSource::thm21);

    for (int n = 1; n < 20; ++n) CHECK(thm21_bracket(n, n).lower == 0.5);

    auto d = thm21_bracket(9, 2, 0.7, 0.7);
    REQUIRE(d.bounded());
    CHECK(d.lower == *d.upper);
    CHECK(d.lower == doctest::Approx(0.7 * std::sqrt(3.0)));

    CHECK(thm21_bracket(100, 0).lower == doctest::Approx(std::max(0.5, komarov_constant() * 10.0)));
    CHECK(thm21_bracket(10000, 0).lower == doctest::Approx(komarov_constant() * 100.0));
}

TEST_CASE("lemma34_bracket examples") {
    CHECK(lemma34_bracket(13, 1).lower == doctest::Approx(1.0));
    CHECK(lemma34_bracket(2, 1).lower == doctest::Approx(1.0 / 12.0));
    CHECK(lemma34_bracket(1001, 1000).lower == doctest::Approx(1.0 / 12000.0));
    auto b = lemma34_bracket(10, 2);
    REQUIRE(b.bounded());
    CHECK(*b.upper == doctest::Approx(5.0));
    CHECK(*lemma34_bracket(10, 2, 3.0).upper == doctest::Approx(15.0));
}

TEST_CASE("constants") {
    CHECK(komarov_constant() == doctest::Approx(2.0 / (3.0 * std::sqrt(210.0 * std::exp(1.0)))));
    CHECK(komarov_constant() == doctest::Approx(0.0279).epsilon(2e-3));
    CHECK(turan_lower(36) == doctest::Approx(1.0));
}

TEST_CASE("evaluate_verdict examples") {
    std::vector<C> z{1.0, 1.0, 1.0, -1.0, -1.0, -1.0};
    auto v = evaluate_verdict(Polynomial::from_zeros(1.0, z), ClassSpec(6, 0, true));
    CHECK(v.all_pass());
    CHECK(v.ratio.value == doctest::Approx(oracle_ratio(1.0, z)).epsilon(1e-9));
    bool saw_turan = false;
    for (const auto& c : v.checks) {
        if (c.bracket.source == BoundSource::turan11) {
            saw_turan = true;
            CHECK(c.bracket.lower == doctest::Approx(std::sqrt(6.0) / 6.0));
        }
    }
    CHECK(saw_turan);

    auto w = evaluate_verdict(Polynomial::from_zeros(1.0, {1.0}), ClassSpec(1, 1, true));
    CHECK(w.all_pass());
    CHECK(w.ratio.value == doctest::Approx(0.5));
    bool saw_cor = false;
    for (const auto& c : w.checks) {
        if (c.bracket.source == BoundSource::cor23) {
            saw_cor = true;
            CHECK(c.bracket.lower == 0.5);
        }
    }
    CHECK(saw_cor);

    CHECK_THROWS_AS(evaluate_verdict(Polynomial::from_zeros(1.0, {2.0}), ClassSpec(1, 0)), PreconditionViolation);
}

TEST_CASE("bracket_holds") {
    CertifiedValue r{1.0, 0.01};
    CHECK(bracket_holds(r, BoundBracket{1.005, std::nullopt, BoundSource::thm21}));
    CHECK_FALSE(bracket_holds(r, BoundBracket{1.02, std::nullopt, BoundSource::thm21}));
    CHECK(bracket_holds(r, BoundBracket{0.5, 0.995, BoundSource::thm21}));
    CHECK_FALSE(bracket_holds(r, BoundBracket{0.5, 0.98, BoundSource::thm21}));
}

TEST_CASE("property: scale invariance") {
    oracle::Gen gen(41);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = gen.integer(1, 20);
        auto p = Polynomial::from_zeros(1.0, gen.zeros_in_disk(n, 2.0));
        const C c = gen.unit_complex() * std::pow(10.0, gen.uniform(-3.0, 3.0));
        const double a = turan_ratio(p).value, b = turan_ratio(p.scaled(c)).value;
        CHECK(std::abs(a - b) <= 1e-12 * a);
    }
}

TEST_CASE("property: interval zero forces ratio >= 1/2") {
    oracle::Gen gen(42);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = gen.integer(1, 20);
        auto z = gen.zeros_in_disk(n, 2.0);
        z[0] = C{gen.uniform(-1.0, 1.0), 0.0};
        auto r = turan_ratio(Polynomial::from_zeros(gen.unit_complex(), z));
        CHECK(r.value + r.err >= 0.5 - 1e-12);
    }
}

TEST_CASE("property: random pinned verdicts pass") {
    oracle::Gen gen(43);
    for (int trial = 0; trial < 500; ++trial) {
        const int n = gen.integer(1, 30);
        const int k = gen.integer(0, n);
        const ClassSpec spec(n, k, true);
        auto v = evaluate_verdict(sample(spec, static_cast<std::uint64_t>(trial) + 1000), spec);
        CHECK(v.all_pass());
        CHECK_FALSE(v.checks.empty());
    }
}

TEST_CASE("property: thm21 lower is monotone") {
    for (int k = 0; k <= 20; ++k) {
        double prev = 0.0;
        for (int n = std::max(k, 1); n <= 5000; n += 7) {
            const double v = thm21_bracket(n, k).lower;
            CHECK(v >= prev);
            prev = v;
            CHECK(thm21_bracket(n, k, 0.1).lower >= (n > std::max(k, 1) ? thm21_bracket(n - 1, k, 0.1).lower : 0.0));
        }
    }
    for (int n = 1; n <= 3000; n += 37) {
        double prev = 1e300;
        for (int k = 0; k <= n; ++k) {
            const double v = thm21_bracket(n, k).lower;
            CHECK(v <= prev);
            prev = v;
        }
    }
}
