#pragma once

// Gorenstein tests for s-lecture hall cones and simple rational cones
// {x : A x >= 0}, plus closed-form Gorenstein points for l-sequences and
// u-generated sequences.

#include "lhcone/exact_arith.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

namespace lhcone {

struct GorensteinPoint {
    std::vector<ExactInt> point;
};

/// The forced value of coordinate `index` (1-based) is the non-integral `witness`.
struct GorensteinFailure {
    std::size_t index;
    ExactRat witness;
};

struct GorensteinResult {
    std::variant<GorensteinPoint, GorensteinFailure> status;

    bool is_gorenstein() const noexcept { return std::holds_alternative<GorensteinPoint>(status); }
    const std::vector<ExactInt>& point() const { return std::get<GorensteinPoint>(status).point; }
    const GorensteinFailure& failure() const { return std::get<GorensteinFailure>(status); }
};

/// Square matrix of exact rationals, row-major.
class RationalMatrix {
public:
    RationalMatrix() = default;
    /// Throws DomainError unless every row has rows.size() entries.
    explicit RationalMatrix(std::vector<std::vector<ExactRat>> rows);

    static RationalMatrix identity(std::size_t n);

    std::size_t size() const noexcept { return rows_.size(); }
    const std::vector<ExactRat>& row(std::size_t i) const { return rows_.at(i); }
    const ExactRat& operator()(std::size_t i, std::size_t j) const { return rows_.at(i).at(j); }
    const std::vector<std::vector<ExactRat>>& rows() const noexcept { return rows_; }

private:
    std::vector<std::vector<ExactRat>> rows_;
};

/// One row per line, whitespace-separated `p/q` or integer entries.
/// Blank lines and lines starting with '#' are ignored.
RationalMatrix parse_matrix(std::string_view text);

/// Rows alpha^1 = (1/s_1, 0, ...), alpha^j = (..., -1/s_{j-1}, 1/s_j, ...).
RationalMatrix lecture_hall_matrix(std::span<const ExactInt> s);

/// The cone {x : A x >= 0} with A lower triangular and a positive diagonal.
class TriangularCone {
public:
    /// Throws DomainError if A is not lower triangular with positive diagonal.
    explicit TriangularCone(RationalMatrix a);

    const RationalMatrix& matrix() const noexcept { return a_; }
    std::size_t dimension() const noexcept { return a_.size(); }

private:
    RationalMatrix a_;
};

/// c_1 = 1, c_j = (c_{j-1} s_j + gcd(s_j, s_{j-1})) / s_{j-1}; stops at the
/// first non-integral c_j.
GorensteinResult lecture_hall_gorenstein(std::span<const ExactInt> s);

/// Smallest n <= horizon for which the cone of the first n terms of the
/// (l, b) recurrence is not Gorenstein. Failure then persists for all larger n.
std::optional<std::size_t> gorenstein_fail_index(const ExactInt& ell, const ExactInt& b,
                                                 std::size_t horizon);

/// Coordinatewise-minimal integer point with alpha^i(c) > 0 for each row i.
/// It is the Gorenstein point whenever the cone is Gorenstein.
std::vector<ExactInt> greedy_interior_point(const TriangularCone& cone);

/// Gorenstein test for an arbitrary invertible A: q_j generates alpha^j(Z^n),
/// and the cone is Gorenstein iff the solution of A c = q is integral.
/// Throws SingularMatrix.
GorensteinResult simple_cone_gorenstein(const RationalMatrix& a);

/// (s_1, s_1 + s_2, ..., s_{n-1} + s_n) for the l-sequence; requires l >= 2.
std::vector<ExactInt> ell_sequence_point(const ExactInt& ell, std::size_t n);

/// c_1 = 1, c_2 = u_1, c_{i+1} = u_i c_i - c_{i-1}. Validates that the
/// u-generated sequence starting at s1 stays positive through n terms.
std::vector<ExactInt> u_generated_point(std::span<const ExactInt> u, std::size_t n,
                                        const ExactInt& s1 = ExactInt(1));

}  // namespace lhcone
