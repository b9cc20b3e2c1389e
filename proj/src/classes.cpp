#include "turanlab/classes.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "turanlab/errors.hpp"
#include "turanlab/roots.hpp"

namespace turan {

namespace {

constexpr double kFreeBox = 3.0;
constexpr double kSampleBox = 2.0;
// Parameter used for free slots that hold no zero of a lower-degree
// polynomial: tanh(8) ~ 1 - 2e-7, i.e. a corner of the box.
constexpr double kFarParam = 8.0;

std::vector<Complex> zeros_of(const Polynomial& p) {
    if (p.is_factored()) return {p.zeros().begin(), p.zeros().end()};
    auto c = p.coefficients();
    return polynomial_roots(c);
}

}  // namespace

ClassSpec::ClassSpec(int n_, int k_, bool pin, double tol) : n(n_), k(k_), pin_interval_zero(pin), geom_tol(tol) {
    if (n < 0 || k < 0 || k > n) throw InvalidArgument("class spec requires 0 <= k <= n");
    if (!(tol >= 0.0)) throw InvalidArgument("class spec requires geom_tol >= 0");
}

Complex HalfDiskPoint::to_complex() const { return std::polar(r, theta); }

bool in_upper_half_disk(Complex z, double tol) { return std::abs(z) <= 1.0 + tol && z.imag() >= -tol; }

bool on_unit_interval(Complex z, double tol) {
    return std::abs(z.imag()) <= tol && z.real() >= -1.0 - tol && z.real() <= 1.0 + tol;
}

MembershipReport is_member(const Polynomial& p, const ClassSpec& spec) {
    MembershipReport rep;
    if (p.is_zero()) {
        rep.reason = "the zero polynomial is excluded";
        return rep;
    }
    if (p.degree() > spec.n) {
        rep.reason = "degree " + std::to_string(p.degree()) + " exceeds n = " + std::to_string(spec.n);
        return rep;
    }
    auto zeros = zeros_of(p);
    for (std::size_t i = 0; i < zeros.size(); ++i) {
        if (in_upper_half_disk(zeros[i], spec.geom_tol)) rep.counted.push_back(static_cast<int>(i));
        if (!rep.interval_zero && on_unit_interval(zeros[i], spec.geom_tol)) rep.interval_zero = static_cast<int>(i);
    }
    const int need = spec.n - spec.k;
    if (static_cast<int>(rep.counted.size()) < need) {
        rep.reason = "only " + std::to_string(rep.counted.size()) + " zeros in the upper half-disk, need " +
                     std::to_string(need);
        return rep;
    }
    if (spec.pin_interval_zero && !rep.interval_zero) {
        rep.reason = "no zero in [-1, 1]";
        return rep;
    }
    rep.member = true;
    return rep;
}

std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream) noexcept
    : key_(splitmix64(seed ^ splitmix64(stream + 0x632BE59BD9B4E019ULL))) {}

std::uint64_t CounterRng::next() noexcept { return splitmix64(key_ + 0x9E3779B97F4A7C15ULL * ++counter_); }

double CounterRng::uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

Polynomial sample(const ClassSpec& spec, std::uint64_t seed) {
    if (spec.pin_interval_zero && spec.n == 0) {
        throw InvalidArgument("sample: a pinned interval zero needs n >= 1");
    }
    CounterRng rng(seed);
    std::vector<Complex> zeros;
    zeros.reserve(static_cast<std::size_t>(spec.n));
    for (int i = 0; i < spec.constrained(); ++i) {
        const double r = std::sqrt(rng.uniform());
        const double theta = std::numbers::pi * rng.uniform();
        zeros.push_back(std::polar(r, theta));
    }
    for (int i = 0; i < spec.k; ++i) {
        const double re = rng.uniform(-kSampleBox, kSampleBox);
        const double im = rng.uniform(-kSampleBox, kSampleBox);
        zeros.emplace_back(re, im);
    }
    if (spec.pin_interval_zero) zeros[0] = Complex{rng.uniform(-1.0, 1.0), 0.0};
    return Polynomial::from_zeros(1.0, std::move(zeros));
}

Polynomial embed(std::span<const double> params, const ClassSpec& spec) {
    if (static_cast<int>(params.size()) != spec.parameter_count()) {
        throw InvalidArgument("embed: expected " + std::to_string(spec.parameter_count()) + " parameters, got " +
                              std::to_string(params.size()));
    }
    std::vector<Complex> zeros;
    zeros.reserve(static_cast<std::size_t>(spec.n));
    const int m = spec.constrained();
    for (int i = 0; i < spec.n; ++i) {
        const double a = params[2 * static_cast<std::size_t>(i)];
        const double b = params[2 * static_cast<std::size_t>(i) + 1];
        if (i == 0 && spec.pin_interval_zero) {
            zeros.emplace_back(std::clamp(a, -1.0, 1.0), 0.0);
        } else if (i < m) {
            const double r = std::clamp(a, 0.0, 1.0);
            const double theta = std::clamp(b, 0.0, std::numbers::pi);
            // Exact values on the boundary rays so members sit on [-1, 1].
            if (theta == 0.0) {
                zeros.emplace_back(r, 0.0);
            } else if (theta == std::numbers::pi) {
                zeros.emplace_back(-r, 0.0);
            } else {
                zeros.push_back(std::polar(r, theta));
            }
        } else {
            zeros.emplace_back(kFreeBox * std::tanh(a), kFreeBox * std::tanh(b));
        }
    }
    return Polynomial::from_zeros(1.0, std::move(zeros));
}

std::vector<double> unembed(const Polynomial& p, const ClassSpec& spec) {
    auto zeros = zeros_of(p);
    std::vector<bool> used(zeros.size(), false);
    std::vector<double> params(static_cast<std::size_t>(spec.parameter_count()), 0.0);
    const int m = spec.constrained();
    const double tol = spec.geom_tol;

    auto take = [&](auto&& pred) -> std::optional<Complex> {
        for (std::size_t i = 0; i < zeros.size(); ++i) {
            if (!used[i] && pred(zeros[i])) {
                used[i] = true;
                return zeros[i];
            }
        }
        return std::nullopt;
    };
    for (int i = 0; i < spec.n; ++i) {
        auto& a = params[2 * static_cast<std::size_t>(i)];
        auto& b = params[2 * static_cast<std::size_t>(i) + 1];
        if (i == 0 && spec.pin_interval_zero) {
            auto z = take([&](Complex w) { return on_unit_interval(w, tol); });
            if (!z) throw InvalidArgument("unembed: no zero in [-1, 1] to pin");
            a = std::clamp(z->real(), -1.0, 1.0);
        } else if (i < m) {
            auto z = take([&](Complex w) { return in_upper_half_disk(w, tol); });
            if (!z) throw InvalidArgument("unembed: not enough zeros in the upper half-disk");
            a = std::min(std::abs(*z), 1.0);
            b = std::clamp(std::arg(*z), 0.0, std::numbers::pi);
            if (std::abs(z->imag()) <= tol) b = z->real() < 0.0 ? std::numbers::pi : 0.0;
        } else {
            auto z = take([](Complex) { return true; });
            if (!z) {
                a = b = kFarParam;
                continue;
            }
            auto inv = [](double v) {
                const double t = std::clamp(v / kFreeBox, -1.0 + 1e-12, 1.0 - 1e-12);
                return std::atanh(t);
            };
            a = inv(z->real());
            b = inv(z->imag());
        }
    }
    return params;
}

bool incomplete_member(const Polynomial& p, const IncompleteSpec& spec) {
    if (p.is_zero()) return false;
    if (p.degree() > spec.n + spec.k) return false;
    auto zeros = zeros_of(p);
    const auto at_origin =
        std::count_if(zeros.begin(), zeros.end(), [&](Complex z) { return std::abs(z) <= spec.geom_tol; });
    return at_origin >= spec.n + 1;
}

}  // namespace turan
