#pragma once

#include <map>
#include <optional>
#include <string>

#include "turanlab/classes.hpp"
#include "turanlab/polynomial.hpp"
#include "turanlab/search.hpp"
#include "turanlab/supnorm.hpp"

namespace turan {

enum class Confinement { inside, outside, vacuous };

const char* to_string(Confinement c) noexcept;

struct ConstructionReport {
    std::string name;
    Polynomial p;
    std::map<std::string, Polynomial> intermediate;
    CertifiedValue ratio;
    double predicted_bound = 0.0;
    bool claims_upper_bound = false;
    MembershipReport class_check;
    ClassSpec advertised_class;

    // thm24 pipeline
    std::optional<double> maximizer;          // leftmost argmax of |P'| on [0, 1]
    std::optional<double> confinement_radius; // sqrt(10(2k+1)/n)
    std::optional<Confinement> confinement;
    std::optional<int> inner_degree;          // deg U in P = (1-x^2)^(n-k+1) U
    std::optional<double> norm_identity_gap;  // | ||P||_[-1,1] - ||Q||_[0,1] |
    std::optional<double> norm_identity_err;  // combined error radii
    std::optional<double> derivative_identity_gap;  // max |P'(x) - 2x R'(x^2)| / ||P'||

    // remark family
    std::optional<int> m;
    std::optional<double> predicted_maximizer;  // ((m-1)/(mn-1))^(1/m)
    std::optional<double> norm;                 // ||P||_[-1,1]

    // classical families
    std::optional<double> turan_bound;          // sqrt(deg)/6
    std::optional<double> sharpness;            // ratio / sqrt(deg)
};

// Near-extremal member of F_{2n,2k}: Q from the incomplete search (sup-norm
// denominator), R(x) = Q(1-x), P(x) = R(x^2).
ConstructionReport thm24_construct(int n, int k, const SearchConfig& cfg);

// Smallest even m in (1/eps, 1/eps + 2].
int remark_even_m(double epsilon);

// P_n(z) = (z^m - 1)^n, all zeros on the unit circle.
ConstructionReport remark_family(double epsilon, int n);

enum class ClassicalFamily { turan_even, turan_odd };

const char* to_string(ClassicalFamily f) noexcept;

// (x^2-1)^m or (x^2-1)^m (x+1).
ConstructionReport classical_family(ClassicalFamily family, int m);

}  // namespace turan
