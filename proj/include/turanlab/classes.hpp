#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "turanlab/polynomial.hpp"

namespace turan {

// F_{n,k}: degree <= n with at least n - k zeros in the closed upper
// half-disk D+ = {|z| <= 1, Im z >= 0}. With pin_interval_zero the member
// must also have a zero in [-1, 1].
struct ClassSpec {
    int n = 0;
    int k = 0;
    bool pin_interval_zero = false;
    double geom_tol = 1e-9;

    ClassSpec() = default;
    ClassSpec(int n_, int k_, bool pin = false, double tol = 1e-9);

    int constrained() const noexcept { return n - k; }
    // Length of the parameter vector accepted by embed().
    int parameter_count() const noexcept { return 2 * n; }
};

// Point of D+ in polar form.
struct HalfDiskPoint {
    double r = 0.0;
    double theta = 0.0;

    Complex to_complex() const;
};

// P_{n,k}: real coefficients, degree <= n + k, at least n + 1 zeros at 0.
struct IncompleteSpec {
    int n = 1;
    int k = 1;
    double geom_tol = 1e-9;
};

struct MembershipReport {
    bool member = false;
    std::vector<int> counted;           // indices of zeros found in D+
    std::optional<int> interval_zero;   // index of a zero in [-1, 1]
    std::string reason;                 // empty when member

    explicit operator bool() const noexcept { return member; }
};

bool in_upper_half_disk(Complex z, double tol = 1e-9);
bool on_unit_interval(Complex z, double tol = 1e-9);

MembershipReport is_member(const Polynomial& p, const ClassSpec& spec);

// Deterministic in seed; the output always satisfies is_member.
Polynomial sample(const ClassSpec& spec, std::uint64_t seed);

// Optimizer parametrization. Layout: one (r, theta) pair per constrained
// zero, clamped to [0,1] x [0,pi]; then one (re, im) pair per free zero,
// mapped through 3 tanh into [-3,3]^2. With pin_interval_zero the first
// zero (constrained if any, else free) is the real number clamp(p0,-1,1)
// and its second coordinate is ignored.
Polynomial embed(std::span<const double> params, const ClassSpec& spec);

// Best-effort inverse of embed, used to warm-start searches from known
// members. Zeros are assigned to slots greedily; out-of-box free zeros clamp.
std::vector<double> unembed(const Polynomial& p, const ClassSpec& spec);

bool incomplete_member(const Polynomial& p, const IncompleteSpec& spec);

// Counter-based generator: the i-th draw depends only on (seed, i), so
// parallel sweeps that hand out disjoint counters are reproducible.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0) noexcept;

    std::uint64_t next() noexcept;
    double uniform() noexcept;  // [0, 1)
    double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform(); }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

std::uint64_t splitmix64(std::uint64_t x) noexcept;

}  // namespace turan
