#pragma once

#include <complex>
#include <span>
#include <utility>
#include <vector>

namespace turan {

using Complex = std::complex<double>;

// Coefficient expansion is refused beyond this degree; double precision
// coefficient growth makes the expanded form meaningless past it.
inline constexpr int kExpansionCap = 60;

struct Interval {
    double lo = -1.0;
    double hi = 1.0;

    Interval() = default;
    Interval(double lo_, double hi_);

    double length() const noexcept { return hi - lo; }
    bool contains(double x) const noexcept { return lo <= x && x <= hi; }
};

// Real polynomial in ascending power order. Carrier for |P(x)|^2 and for
// critical-point equations.
class RealPolynomial {
public:
    RealPolynomial() = default;
    explicit RealPolynomial(std::vector<double> coeffs);
    // Keeps the extended-precision coefficients for evaluation; coeffs()
    // exposes them rounded to double.
    static RealPolynomial extended(std::vector<long double> coeffs);

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    std::span<const double> coeffs() const noexcept { return coeffs_; }
    double coeff(int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }

    double operator()(double x) const noexcept;
    // Upper bound on the rounding error of operator()(x).
    double eval_error_bound(double x) const noexcept;

    RealPolynomial derivative() const;

private:
    std::vector<double> coeffs_;  // trailing zeros trimmed; empty == zero polynomial
    std::vector<long double> precise_;  // empty unless built from long double
};

// Polynomial over C held in factored form: leading * prod (x - z_i).
//
// The factored form is the source of truth. A polynomial may instead be
// coefficient-backed when a derivative could not be re-factored to the
// required residual; such values evaluate by Horner and report
// is_factored() == false.
class Polynomial {
public:
    // The constant 1.
    Polynomial();

    static Polynomial from_zeros(Complex leading, std::vector<Complex> zeros);
    static Polynomial zero();
    static Polynomial constant(Complex c);
    // Coefficient-backed polynomial, ascending order. Trailing zeros are trimmed.
    static Polynomial from_coefficients(std::vector<Complex> coeffs);

    bool is_zero() const noexcept { return is_zero_; }
    bool is_factored() const noexcept { return coeffs_.empty() || is_zero_; }
    // -1 for the zero polynomial.
    int degree() const noexcept;
    Complex leading() const noexcept { return leading_; }
    // Empty for coefficient-backed polynomials.
    std::span<const Complex> zeros() const noexcept { return zeros_; }

    Complex operator()(Complex x) const noexcept;
    // P(x) and P'(x) in one pass over the factors.
    std::pair<Complex, Complex> value_and_derivative(Complex x) const noexcept;

    // Ascending coefficients. Throws UnsupportedDegree above kExpansionCap.
    std::vector<Complex> coefficients() const;

    // The polynomial whose coefficients are the conjugates of these.
    Polynomial conjugate() const;
    Polynomial scaled(Complex c) const;

private:
    Complex leading_{1.0, 0.0};
    std::vector<Complex> zeros_;
    std::vector<Complex> coeffs_;  // only for coefficient-backed values
    bool is_zero_ = false;
};

Complex evaluate(const Polynomial& p, Complex x);

// P'. Factored input is differentiated without expansion: repeated zeros
// carry over with multiplicity minus one and the remaining zeros are the
// roots of the logarithmic-derivative numerator. Falls back to a
// coefficient-backed result (subject to kExpansionCap) when those roots
// fail the residual check.
Polynomial derivative(const Polynomial& p);

// The real polynomial P(x) * conj(P)(x), equal to |P(x)|^2 for real x.
RealPolynomial modulus_square_on_reals(const Polynomial& p);

// Distinct zeros with multiplicities, grouped by exact equality.
struct ZeroGroup {
    Complex value;
    int multiplicity;
};
std::vector<ZeroGroup> group_zeros(std::span<const Complex> zeros);

// Ascending coefficients of leading * prod (x - z_i), without a cap check.
std::vector<Complex> expand(Complex leading, std::span<const Complex> zeros);

}  // namespace turan
