#include "turanlab/polynomial.hpp"

#include <algorithm>
#include <cmath>

#include "turanlab/errors.hpp"
#include "turanlab/roots.hpp"

namespace turan {

namespace {

constexpr double kEps = 2.220446049250313e-16;
constexpr double kRefactorResidual = 1e-8;

void require_finite(Complex z, const char* what) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw InvalidArgument(std::string(what) + " must be finite");
    }
}

}  // namespace

Interval::Interval(double lo_, double hi_) : lo(lo_), hi(hi_) {
    if (!std::isfinite(lo) || !std::isfinite(hi) || lo > hi) {
        throw InvalidArgument("interval requires finite lo <= hi");
    }
}

// --- RealPolynomial -------------------------------------------------------

RealPolynomial::RealPolynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back() == 0.0) coeffs_.pop_back();
}

RealPolynomial RealPolynomial::extended(std::vector<long double> coeffs) {
    RealPolynomial out;
    out.precise_ = std::move(coeffs);
    while (!out.precise_.empty() && out.precise_.back() == 0.0L) out.precise_.pop_back();
    out.coeffs_.assign(out.precise_.begin(), out.precise_.end());
    return out;
}

// Compensated Horner scheme (error-free transformations for the product
// and the sum), accurate as if evaluated in twice the working precision.
double RealPolynomial::operator()(double x) const noexcept {
    if (!precise_.empty()) {
        long double acc = 0.0L;
        for (auto it = precise_.rbegin(); it != precise_.rend(); ++it) acc = acc * x + *it;
        return static_cast<double>(acc);
    }
    double acc = 0.0, comp = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        const double prod = acc * x;
        const double perr = std::fma(acc, x, -prod);
        const double sum = prod + *it;
        const double t = sum - prod;
        const double serr = (prod - (sum - t)) + (*it - t);
        acc = sum;
        comp = comp * x + (perr + serr);
    }
    return acc + comp;
}

double RealPolynomial::eval_error_bound(double x) const noexcept {
    double acc = 0.0;
    const double ax = std::abs(x);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * ax + std::abs(*it);
    return 2.0 * (static_cast<double>(coeffs_.size()) + 1.0) * kEps * acc;
}

RealPolynomial RealPolynomial::derivative() const {
    if (coeffs_.size() <= 1) return RealPolynomial{};
    if (!precise_.empty()) {
        std::vector<long double> d(precise_.size() - 1);
        for (std::size_t i = 1; i < precise_.size(); ++i) d[i - 1] = static_cast<long double>(i) * precise_[i];
        return extended(std::move(d));
    }
    std::vector<double> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = static_cast<double>(i) * coeffs_[i];
    return RealPolynomial(std::move(d));
}

// --- Polynomial -----------------------------------------------------------

Polynomial::Polynomial() = default;

Polynomial Polynomial::from_zeros(Complex leading, std::vector<Complex> zeros) {
    require_finite(leading, "leading coefficient");
    for (const auto& z : zeros) require_finite(z, "zero");
    if (leading == Complex{0.0, 0.0}) {
        if (!zeros.empty()) {
            throw InvalidConstruction("leading coefficient 0 with a nonempty zero list");
        }
        return zero();
    }
    Polynomial p;
    p.leading_ = leading;
    p.zeros_ = std::move(zeros);
    return p;
}

Polynomial Polynomial::zero() {
    Polynomial p;
    p.leading_ = Complex{0.0, 0.0};
    p.is_zero_ = true;
    return p;
}

Polynomial Polynomial::constant(Complex c) { return from_zeros(c, {}); }

Polynomial Polynomial::from_coefficients(std::vector<Complex> coeffs) {
    while (!coeffs.empty() && coeffs.back() == Complex{0.0, 0.0}) coeffs.pop_back();
    for (const auto& c : coeffs) require_finite(c, "coefficient");
    if (coeffs.empty()) return zero();
    if (coeffs.size() == 1) return constant(coeffs[0]);
    Polynomial p;
    p.leading_ = coeffs.back();
    p.coeffs_ = std::move(coeffs);
    return p;
}

int Polynomial::degree() const noexcept {
    if (is_zero_) return -1;
    if (!coeffs_.empty()) return static_cast<int>(coeffs_.size()) - 1;
    return static_cast<int>(zeros_.size());
}

Complex Polynomial::operator()(Complex x) const noexcept {
    if (is_zero_) return {0.0, 0.0};
    if (!coeffs_.empty()) {
        Complex acc{0.0, 0.0};
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }
    Complex acc = leading_;
    for (const auto& z : zeros_) acc *= (x - z);
    return acc;
}

std::pair<Complex, Complex> Polynomial::value_and_derivative(Complex x) const noexcept {
    if (is_zero_) return {{0.0, 0.0}, {0.0, 0.0}};
    if (!coeffs_.empty()) {
        Complex p{0.0, 0.0}, dp{0.0, 0.0};
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            dp = dp * x + p;
            p = p * x + *it;
        }
        return {p, dp};
    }
    Complex p{1.0, 0.0}, dp{0.0, 0.0};
    for (const auto& z : zeros_) {
        dp = dp * (x - z) + p;
        p *= (x - z);
    }
    return {leading_ * p, leading_ * dp};
}

std::vector<Complex> Polynomial::coefficients() const {
    if (is_zero_) return {};
    if (!coeffs_.empty()) return coeffs_;
    if (degree() > kExpansionCap) throw UnsupportedDegree(degree(), kExpansionCap);
    return expand(leading_, zeros_);
}

Polynomial Polynomial::conjugate() const {
    if (is_zero_) return *this;
    Polynomial q = *this;
    q.leading_ = std::conj(leading_);
    for (auto& z : q.zeros_) z = std::conj(z);
    for (auto& c : q.coeffs_) c = std::conj(c);
    return q;
}

Polynomial Polynomial::scaled(Complex c) const {
    if (c == Complex{0.0, 0.0} || is_zero_) return zero();
    Polynomial q = *this;
    q.leading_ *= c;
    for (auto& a : q.coeffs_) a *= c;
    return q;
}

Complex evaluate(const Polynomial& p, Complex x) { return p(x); }

std::vector<Complex> expand(Complex leading, std::span<const Complex> zeros) {
    std::vector<Complex> c{leading};
    c.reserve(zeros.size() + 1);
    for (const auto& z : zeros) {
        c.push_back(Complex{0.0, 0.0});
        for (std::size_t i = c.size() - 1; i > 0; --i) c[i] = c[i - 1] - z * c[i];
        c[0] = -z * c[0];
    }
    return c;
}

std::vector<ZeroGroup> group_zeros(std::span<const Complex> zeros) {
    std::vector<Complex> sorted(zeros.begin(), zeros.end());
    std::sort(sorted.begin(), sorted.end(), [](Complex a, Complex b) {
        return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
    });
    std::vector<ZeroGroup> groups;
    for (const auto& z : sorted) {
        if (!groups.empty() && groups.back().value == z) {
            ++groups.back().multiplicity;
        } else {
            groups.push_back({z, 1});
        }
    }
    return groups;
}

Polynomial derivative(const Polynomial& p) {
    if (p.is_zero() || p.degree() == 0) return Polynomial::zero();
    if (!p.is_factored()) {
        auto c = p.coefficients();
        std::vector<Complex> d(c.size() - 1);
        for (std::size_t i = 1; i < c.size(); ++i) d[i - 1] = static_cast<double>(i) * c[i];
        return Polynomial::from_coefficients(std::move(d));
    }

    const int n = p.degree();
    auto groups = group_zeros(p.zeros());
    std::vector<Complex> zeros;
    zeros.reserve(static_cast<std::size_t>(n - 1));
    for (const auto& g : groups) {
        for (int i = 1; i < g.multiplicity; ++i) zeros.push_back(g.value);
    }
    auto crit = log_derivative_roots(groups);
    if (crit.max_relative_residual > kRefactorResidual) {
        if (n > kExpansionCap) throw UnsupportedDegree(n, kExpansionCap);
        auto c = p.coefficients();
        std::vector<Complex> d(c.size() - 1);
        for (std::size_t i = 1; i < c.size(); ++i) d[i - 1] = static_cast<double>(i) * c[i];
        return Polynomial::from_coefficients(std::move(d));
    }
    zeros.insert(zeros.end(), crit.roots.begin(), crit.roots.end());
    return Polynomial::from_zeros(static_cast<double>(n) * p.leading(), std::move(zeros));
}

RealPolynomial modulus_square_on_reals(const Polynomial& p) {
    if (p.is_zero()) return RealPolynomial{};
    if (p.degree() > kExpansionCap) throw UnsupportedDegree(p.degree(), kExpansionCap);
    if (p.is_factored()) {
        // Product of the real quadratics (x - z)(x - conj z).
        std::vector<long double> acc{static_cast<long double>(std::norm(p.leading()))};
        for (const auto& z : p.zeros()) {
            const long double re = z.real(), im = z.imag();
            const long double b = -2.0L * re, c0 = re * re + im * im;
            std::vector<long double> next(acc.size() + 2, 0.0L);
            for (std::size_t i = 0; i < acc.size(); ++i) {
                next[i] += c0 * acc[i];
                next[i + 1] += b * acc[i];
                next[i + 2] += acc[i];
            }
            acc = std::move(next);
        }
        return RealPolynomial::extended(std::move(acc));
    }
    auto c = p.coefficients();
    std::vector<double> out(2 * c.size() - 1, 0.0);
    for (std::size_t i = 0; i < c.size(); ++i) {
        for (std::size_t j = 0; j < c.size(); ++j) {
            out[i + j] += (c[i] * std::conj(c[j])).real();
        }
    }
    return RealPolynomial(std::move(out));
}

}  // namespace turan
