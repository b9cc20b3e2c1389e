#pragma once

#include <functional>
#include <span>
#include <vector>

#include "turanlab/polynomial.hpp"

namespace turan {

struct AberthResult {
    std::vector<Complex> roots;
    bool converged = false;
    int iterations = 0;
};

// Simultaneous Aberth-Ehrlich iteration for the `degree` roots of a
// polynomial that is only available through its Newton quotient
// p(x)/p'(x). The quotient may come from any numerically stable
// evaluation (factored products, sums of partial fractions, Horner).
AberthResult aberth(int degree, const std::function<Complex(Complex)>& newton_quotient,
                    Complex center, double radius, int max_iterations = 500);

// Roots of the numerator of sum_j m_j / (x - w_j), i.e. the zeros of P'
// that are not zeros of P, for P with the given distinct zeros.
struct LogDerivativeRoots {
    std::vector<Complex> roots;
    double max_relative_residual = 0.0;
    bool converged = false;
};
LogDerivativeRoots log_derivative_roots(std::span<const ZeroGroup> groups);

// Merges groups whose values lie within rel_tol (1 + |value|) of each other
// into one group at the multiplicity-weighted mean. Used where zero sets are
// combined from separately computed pieces (P with conj P), whose rounding
// would otherwise leave near-coincident poles.
std::vector<ZeroGroup> merge_close_groups(std::vector<ZeroGroup> groups, double rel_tol = 1e-10);

// Complex roots of a coefficient polynomial (ascending, nonzero leading).
std::vector<Complex> polynomial_roots(std::span<const Complex> coeffs);

}  // namespace turan
