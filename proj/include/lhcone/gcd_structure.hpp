#pragma once

// Arithmetic of gcd(s_{n+1}, s_n) for s_j = l s_{j-1} + b s_{j-2}, s_0 = 0,
// s_1 = 1, organised around the invariants
//
//   r = gcd(l, b),  t = gcd(l^2/r, b/r),  sigma = r/t,
//   gamma = l/r,    beta = b/(r t),
//
// so that t^{n-1} sigma^{floor(n/2)} | gcd(s_{n+1}, s_n) | t^n sigma^{floor(n/2)}.

#include "lhcone/exact_arith.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace lhcone {

struct GcdProfile {
    ExactInt r;
    ExactInt t;
    ExactInt sigma;
    ExactInt gamma;
    ExactInt beta;
};

/// Throws DomainError for l = 0 or b = 0; InvariantViolation if any of the
/// defining identities fails to hold.
GcdProfile gcd_profile(const ExactInt& ell, const ExactInt& b);

struct RatioRow {
    std::size_t n;
    ExactInt gcd;         // gcd(s_{n+1}, s_n)
    ExactInt normalizer;  // t^{n-1} sigma^{floor(n/2)}
    ExactInt u;           // gcd / normalizer, a divisor of t
};

struct RatioTable {
    ExactInt ell;
    ExactInt b;
    GcdProfile profile;
    std::vector<RatioRow> rows;

    /// Columns n,gcd,normalizer,u_n with a header line.
    std::string to_csv() const;
};

/// Rows n = 1..N. Throws DomainError unless the recurrence is positive and
/// b != 0; InvariantViolation if some u_n is not an integer dividing t.
RatioTable ratio_table(const ExactInt& ell, const ExactInt& b, std::size_t N);

/// f_1..f_n with f_j = (l/t) f_{j-1} + (b/t^2) f_{j-2}. Checks s_j = t^{j-1} f_j
/// and gcd(f_{j+1}, f_j) = sigma^{floor(j/2)} along the way.
std::vector<ExactInt> f_sequence(const ExactInt& ell, const ExactInt& b, std::size_t n);

struct N0Certificate {
    std::size_t n0;
    std::size_t first_hit;  // first n at which the bound holds at all
    std::size_t window;     // bound verified on [n0, n0 + window]
    ExactInt bound;         // t (r + |b|)
};

/// Smallest n0 such that s_n / (t^{n-2} sigma^{floor((n-1)/2)}) > t (r + |b|)
/// holds for every n in [n0, n0 + window]. When `window` is not given it
/// defaults to max(64, 4 * first_hit). Candidates are searched up to
/// `search_limit`; HorizonTooSmall is thrown if none is certified.
N0Certificate find_n0(const ExactInt& ell, const ExactInt& b,
                      std::optional<std::size_t> window = std::nullopt,
                      std::size_t search_limit = 4096);

struct FailureThresholdVerdict {
    bool applicable;                   // gcd(l, b) == gcd(l^2, b)
    std::size_t threshold;             // 5 for b > 0, 6 for b < -1
    std::optional<std::size_t> actual; // first non-Gorenstein dimension
    bool confirmed;                    // actual exists and actual <= threshold
};

/// When gcd(l, b) = gcd(l^2, b), predicts that the lecture hall cone fails to
/// be Gorenstein from dimension 5 (b > 0) or 6 (b < -1) on, and checks the
/// prediction against the Gorenstein recursion. Throws DomainError for
/// b in {0, -1} or a non-positive recurrence.
FailureThresholdVerdict failure_threshold_check(const ExactInt& ell, const ExactInt& b);

}  // namespace lhcone
