#pragma once

// Lattice-point enumeration in s-lecture hall cones
//
//   L_n^(s) = { lambda in Z^n : 0 <= lambda_1/s_1 <= ... <= lambda_n/s_n },
//
// used as an independent oracle for the algebraic Gorenstein tests:
// weight generating functions and their numerators H(q), Ehrhart counts of
// the rational lecture hall polytope and its h*-vector Q(x).

#include "lhcone/exact_arith.hpp"
#include "lhcone/gorenstein.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace lhcone {

/// Caps on an enumeration run. `max_nodes` bounds the number of partial
/// points visited; `max_degree` bounds truncation degrees and Ehrhart
/// horizons (and hence memory).
struct EnumerationBudget {
    std::uint64_t max_nodes = 2'000'000'000ULL;
    std::size_t max_degree = 1U << 24;

    /// Defaults, with max_nodes overridden by LHCONE_BUDGET when set.
    static EnumerationBudget from_environment();
};

/// Coefficient m counts lambda in L_n^(s) with |lambda| = m.
struct WeightSeries {
    TruncatedSeries series;
};

/// Counts through degree M. Enumerates coordinate by coordinate with
/// lambda_{i+1} >= ceil(lambda_i s_{i+1} / s_i), pruning on the minimal
/// completion weight. Throws BudgetExceeded.
WeightSeries weight_series(std::span<const ExactInt> s, std::size_t M,
                           const EnumerationBudget& budget = {});

/// d_i = s_i + ... + s_n, the exponents in prod_i (1 - q^{d_i}).
std::vector<ExactInt> denominator_exponents(std::span<const ExactInt> s);

/// H(q) with f(q) = H(q) / prod_i (1 - q^{d_i}). Verifies nonnegative
/// coefficients, deg H < sum d_i and H(1) = s_1 ... s_n; a failure there
/// throws InvariantViolation.
DensePoly numerator_H(std::span<const ExactInt> s, const EnumerationBudget& budget = {});

/// Greedily peels n factors 1/(1 - q^e) off f. Returns the sorted exponents
/// if the residual is 1 through the truncation degree, otherwise nothing.
std::optional<std::vector<ExactInt>> detect_product_form(const WeightSeries& f, std::size_t n);

/// i(R_n^(s), t) = #{lambda in L_n^(s) : lambda_n <= t} for t = 0..T.
std::vector<ExactInt> ehrhart_counts(std::span<const ExactInt> s, std::size_t T,
                                     const EnumerationBudget& budget = {});

struct HStarVector {
    DensePoly coeffs;               // Q_n^(s)(x)
    ExactInt denominator_exponent;  // s_n
    std::size_t power;              // n + 1

    bool symmetric() const { return is_palindromic(coeffs); }
    bool unimodal() const { return is_unimodal(coeffs); }
};

/// Q(x) with sum_t i(R, t) x^t = Q(x) / (1 - x^{s_n})^{n+1}. Verifies
/// deg Q < (n+1) s_n, nonnegative coefficients and Q(1) = s_n s_1 ... s_n.
HStarVector h_star(std::span<const ExactInt> s, const EnumerationBudget& budget = {});

struct CrossCheckReport {
    GorensteinResult verdict;
    DensePoly numerator;
    HStarVector h_star;
    bool cone_gorenstein;
    bool numerator_palindromic;
    bool h_star_symmetric;

    bool agree() const {
        return cone_gorenstein == numerator_palindromic && numerator_palindromic == h_star_symmetric;
    }
};

/// Runs the recursion test, the H(q) palindromicity test and the h*-symmetry
/// test side by side. Throws BudgetExceeded up front if sum d_i or
/// (n+1) s_n exceeds budget.max_degree.
CrossCheckReport cross_check_gorenstein(std::span<const ExactInt> s,
                                        const EnumerationBudget& budget = {});

}  // namespace lhcone
