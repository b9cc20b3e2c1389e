#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "turanlab/classes.hpp"
#include "turanlab/errors.hpp"

using namespace turan;
using oracle::C;

TEST_CASE("is_member examples") {
    auto p = Polynomial::from_zeros(1.0, {1.0, 1.0, -1.0, -1.0});
    auto r = is_member(p, ClassSpec(4, 0));
    CHECK(r.member);
    CHECK(r.counted.size() == 4);

    auto q = is_member(Polynomial::from_zeros(1.0, {2.0}), ClassSpec(1, 0));
    CHECK_FALSE(q.member);
    CHECK_FALSE(q.reason.empty());

    auto s = is_member(Polynomial::from_zeros(1.0, {C{0.0, 0.5}, 3.0}), ClassSpec(2, 1));
    CHECK(s.member);
    CHECK(s.counted == std::vector<int>{0});
}

TEST_CASE("is_member boundary tolerance and pin") {
    CHECK(is_member(Polynomial::from_zeros(1.0, {C{1.0 + 5e-10, -5e-10}}), ClassSpec(1, 0)).member);
    CHECK_FALSE(is_member(Polynomial::from_zeros(1.0, {C{0.0, -1e-6}}), ClassSpec(1, 0)).member);
    // degree above n
    CHECK_FALSE(is_member(Polynomial::from_zeros(1.0, {0.0, 0.0}), ClassSpec(1, 1)).member);
    // pin needs a zero in [-1, 1]
    auto p = Polynomial::from_zeros(1.0, {C{0.0, 0.5}, 3.0});
    CHECK_FALSE(is_member(p, ClassSpec(2, 1, true)).member);
    auto q = Polynomial::from_zeros(1.0, {C{0.0, 0.5}, -0.25});
    auto r = is_member(q, ClassSpec(2, 1, true));
    CHECK(r.member);
    REQUIRE(r.interval_zero.has_value());
    CHECK(*r.interval_zero == 1);
}

TEST_CASE("ClassSpec rejects k outside [0, n]") {
    CHECK_THROWS_AS(ClassSpec(2, 3), InvalidArgument);
    CHECK_THROWS_AS(ClassSpec(-1, 0), InvalidArgument);
}

TEST_CASE("sample examples") {
    auto p = sample(ClassSpec(5, 2, true), 3);
    CHECK(p.degree() == 5);
    auto r = is_member(p, ClassSpec(5, 2, true));
    CHECK(r.member);
    CHECK(r.counted.size() >= 3);
    CHECK(r.interval_zero.has_value());

    auto q = sample(ClassSpec(1, 0), 99);
    REQUIRE(q.degree() == 1);
    CHECK(in_upper_half_disk(q.zeros()[0]));

    auto a = sample(ClassSpec(7, 3, true), 1234);
    auto b = sample(ClassSpec(7, 3, true), 1234);
    REQUIRE(a.zeros().size() == b.zeros().size());
    for (std::size_t i = 0; i < a.zeros().size(); ++i) CHECK(a.zeros()[i] == b.zeros()[i]);
    auto c = sample(ClassSpec(7, 3, true), 1235);
    CHECK(c.zeros()[0] != a.zeros()[0]);
}

TEST_CASE("embed examples") {
    auto p = embed(std::vector<double>(4, 0.0), ClassSpec(2, 0));
    REQUIRE(p.degree() == 2);
    for (auto z : p.zeros()) CHECK(std::abs(z) == 0.0);

    auto one = embed(std::vector<double>{1.0, 0.0}, ClassSpec(1, 0));
    CHECK(std::abs(one.zeros()[0] - C{1.0, 0.0}) < 1e-15);

    auto minus = embed(std::vector<double>{1.0, M_PI}, ClassSpec(1, 0));
    CHECK(std::abs(minus.zeros()[0] - C{-1.0, 0.0}) < 1e-15);

    // Clamping keeps the zero on the boundary.
    auto clamped = embed(std::vector<double>{7.0, -3.0}, ClassSpec(1, 0));
    CHECK(std::abs(clamped.zeros()[0] - C{1.0, 0.0}) < 1e-15);

    CHECK_THROWS_AS(embed(std::vector<double>(3, 0.0), ClassSpec(2, 0)), InvalidArgument);
}

TEST_CASE("incomplete_member examples") {
    CHECK(incomplete_member(Polynomial::from_zeros(1.0, {0.0, 0.0}), IncompleteSpec{1, 1}));
    CHECK(incomplete_member(Polynomial::from_zeros(1.0, {0.0, 0.0, 1.0}), IncompleteSpec{1, 2}));
    CHECK_FALSE(incomplete_member(Polynomial::from_zeros(1.0, {0.0, 1.0}), IncompleteSpec{1, 1}));
    CHECK_FALSE(incomplete_member(Polynomial::from_zeros(1.0, {0.0, 0.0, 1.0}), IncompleteSpec{1, 1}));
}

TEST_CASE("property: samples are members") {
    oracle::Gen gen(31);
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = gen.integer(0, 30);
        const int k = gen.integer(0, n);
        const bool pin = n >= 1 && gen.integer(0, 1) == 1;
        const ClassSpec spec(n, k, pin);
        const auto seed = static_cast<std::uint64_t>(gen.integer(0, 1 << 30));
        auto p = sample(spec, seed);
        CHECK(p.degree() == n);
        CHECK(is_member(p, spec).member);
    }
}

TEST_CASE("property: embed is Lipschitz and always a member") {
    oracle::Gen gen(32);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = gen.integer(1, 20);
        const int k = gen.integer(0, n);
        const ClassSpec spec(n, k, gen.integer(0, 1) == 1);
        std::vector<double> x(spec.parameter_count());
        for (auto& v : x) v = gen.uniform(-4.0, 4.0);
        auto p = embed(x, spec);
        CHECK(is_member(p, spec).member);
        const double h = gen.uniform(1e-9, 1e-6);
        auto y = x;
        for (auto& v : y) v += gen.uniform(-h, h);
        auto q = embed(y, spec);
        REQUIRE(p.zeros().size() == q.zeros().size());
        for (std::size_t i = 0; i < p.zeros().size(); ++i) {
            CHECK(std::abs(p.zeros()[i] - q.zeros()[i]) <= 10.0 * h);
        }
    }
}

TEST_CASE("property: class nesting") {
    oracle::Gen gen(33);
    for (int trial = 0; trial < 500; ++trial) {
        const int n = gen.integer(1, 30);
        const int k = gen.integer(0, n - 1);
        const bool pin = gen.integer(0, 1) == 1;
        // Sample from a wider class so that some draws fail (n, k).
        auto p = sample(ClassSpec(n, std::min(n, k + 2), pin), static_cast<std::uint64_t>(trial));
        if (is_member(p, ClassSpec(n, k, pin)).member) {
            CHECK(is_member(p, ClassSpec(n, k + 1, pin)).member);
        }
    }
}

TEST_CASE("unembed round trip") {
    oracle::Gen gen(34);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = gen.integer(1, 12);
        const int k = gen.integer(0, n);
        const ClassSpec spec(n, k, true);
        auto p = sample(spec, static_cast<std::uint64_t>(trial));
        auto q = embed(unembed(p, spec), spec);
        CHECK(is_member(q, spec).member);
        std::vector<C> a(p.zeros().begin(), p.zeros().end()), b(q.zeros().begin(), q.zeros().end());
        auto key = [](C u, C v) { return u.real() < v.real() || (u.real() == v.real() && u.imag() < v.imag()); };
        std::sort(a.begin(), a.end(), key);
        std::sort(b.begin(), b.end(), key);
        for (std::size_t i = 0; i < a.size(); ++i) CHECK(std::abs(a[i] - b[i]) < 1e-9);
    }
}

TEST_CASE("CounterRng is deterministic per counter") {
    CounterRng a(5), b(5), c(6);
    for (int i = 0; i < 10; ++i) {
        const auto x = a.next();
        CHECK(x == b.next());
        CHECK(x != c.next());
    }
    CounterRng u(1);
    for (int i = 0; i < 1000; ++i) {
        const double v = u.uniform();
        CHECK(v >= 0.0);
        CHECK(v < 1.0);
    }
}
