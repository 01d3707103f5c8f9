#pragma once

// Exact integers, rationals, dense polynomials and truncated power series.
//
// Integers and rationals are GMP values; rationals are always kept in
// canonical form (reduced, positive denominator). Polynomials and series
// are immutable value types over ExactInt coefficients.

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lhcone {

using ExactInt = mpz_class;
using ExactRat = mpq_class;

/// Nonnegative gcd; gcd(0, 0) = 0.
ExactInt gcd(const ExactInt& a, const ExactInt& b);
ExactInt lcm(const ExactInt& a, const ExactInt& b);
ExactInt pow(const ExactInt& base, unsigned long exponent);
ExactInt floor_div(const ExactInt& a, const ExactInt& b);
ExactInt ceil_div(const ExactInt& a, const ExactInt& b);
bool divides(const ExactInt& d, const ExactInt& n);

/// Canonical rational num/den. Throws DomainError if den == 0.
ExactRat make_rat(const ExactInt& num, const ExactInt& den);
bool is_integral(const ExactRat& q);
ExactInt floor(const ExactRat& q);

/// Decimal integer with optional sign. Throws ParseError; reported
/// positions are shifted by `offset` so callers can point into a larger text.
ExactInt parse_int(std::string_view text, std::size_t offset = 0);
/// `p/q` or an integer. Throws ParseError (a zero denominator included).
ExactRat parse_rat(std::string_view text, std::size_t offset = 0);

std::string to_string(const ExactInt& v);
/// "p" for integers, "p/q" otherwise.
std::string to_string(const ExactRat& v);

/// Converts to size_t, throwing DomainError if negative or too large.
std::size_t to_size(const ExactInt& v, std::string_view what);

/// Dense univariate polynomial with integer coefficients, trailing zeros
/// stripped. The zero polynomial has no coefficients and degree -1.
class DensePoly {
public:
    DensePoly() = default;
    explicit DensePoly(std::vector<ExactInt> coeffs);

    /// 1 - q^e
    static DensePoly one_minus_q_pow(std::size_t e);
    static DensePoly constant(const ExactInt& c);

    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    const std::vector<ExactInt>& coeffs() const noexcept { return coeffs_; }
    /// Coefficient of q^i; zero beyond the degree.
    ExactInt coeff(std::size_t i) const;
    ExactInt value_at_one() const;
    /// q^deg p(1/q). A zero constant term lowers the degree, so palindromicity
    /// is preserved only when p(0) != 0.
    DensePoly reversed() const;

    friend DensePoly operator+(const DensePoly& a, const DensePoly& b);
    friend DensePoly operator-(const DensePoly& a, const DensePoly& b);
    friend DensePoly operator*(const DensePoly& a, const DensePoly& b);
    friend bool operator==(const DensePoly& a, const DensePoly& b) = default;

private:
    void strip();
    std::vector<ExactInt> coeffs_;
};

/// Coefficients c_0..c_M of a formal power series known through degree M.
class TruncatedSeries {
public:
    /// Requires at least one coefficient; truncation degree is size - 1.
    explicit TruncatedSeries(std::vector<ExactInt> coeffs);

    static TruncatedSeries one(std::size_t truncation_degree);
    /// Coefficients of p through degree M; terms above M are dropped.
    static TruncatedSeries from_poly(const DensePoly& p, std::size_t truncation_degree);

    std::size_t truncation_degree() const noexcept { return coeffs_.size() - 1; }
    const std::vector<ExactInt>& coeffs() const noexcept { return coeffs_; }
    const ExactInt& operator[](std::size_t i) const { return coeffs_.at(i); }

    /// Multiplies by 1/(1 - q^e): a prefix sum with stride e.
    TruncatedSeries divided_by_one_minus_q_pow(std::size_t e) const;
    TruncatedSeries truncated(std::size_t truncation_degree) const;
    /// The stored coefficients read as a polynomial.
    DensePoly to_poly() const;
    /// True iff the series equals 1 through its truncation degree.
    bool is_one() const;

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    /// Compares through the smaller of the two truncation degrees.
    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

private:
    std::vector<ExactInt> coeffs_;
};

TruncatedSeries series_mul_poly(const TruncatedSeries& s, const DensePoly& p);

/// prod_i 1/(1 - q^{e_i}) through degree M. Throws DomainError on e_i <= 0.
TruncatedSeries product_form_series(std::span<const ExactInt> exponents, std::size_t M);

bool is_palindromic(const DensePoly& p);
/// Coefficients weakly increase, then weakly decrease.
bool is_unimodal(const DensePoly& p);

}  // namespace lhcone
