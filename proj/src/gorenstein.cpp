#include "lhcone/gorenstein.hpp"

#include "lhcone/errors.hpp"
#include "lhcone/sequences.hpp"

#include <cctype>
#include <string>
#include <utility>

namespace lhcone {

RationalMatrix::RationalMatrix(std::vector<std::vector<ExactRat>> rows) : rows_(std::move(rows)) {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i].size() != rows_.size()) {
            throw DomainError("matrix row " + std::to_string(i + 1) + " has " +
                              std::to_string(rows_[i].size()) + " entries, expected " +
                              std::to_string(rows_.size()));
        }
    }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
    std::vector<std::vector<ExactRat>> rows(n, std::vector<ExactRat>(n, ExactRat(0)));
    for (std::size_t i = 0; i < n; ++i) rows[i][i] = 1;
    return RationalMatrix(std::move(rows));
}

RationalMatrix parse_matrix(std::string_view text) {
    std::vector<std::vector<ExactRat>> rows;
    std::size_t line_start = 0;
    while (line_start <= text.size()) {
        std::size_t line_end = text.find('\n', line_start);
        if (line_end == std::string_view::npos) line_end = text.size();
        const std::string_view line = text.substr(line_start, line_end - line_start);

        std::vector<ExactRat> row;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            if (i >= line.size()) break;
            if (row.empty() && line[i] == '#') break;
            std::size_t j = i;
            while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
            row.push_back(parse_rat(line.substr(i, j - i), line_start + i));
            i = j;
        }
        if (!row.empty()) rows.push_back(std::move(row));
        if (line_end == text.size()) break;
        line_start = line_end + 1;
    }
    if (rows.empty()) throw ParseError("empty matrix", 0);
    return RationalMatrix(std::move(rows));
}

RationalMatrix lecture_hall_matrix(std::span<const ExactInt> s) {
    const std::size_t n = s.size();
    std::vector<std::vector<ExactRat>> rows(n, std::vector<ExactRat>(n, ExactRat(0)));
    for (std::size_t j = 0; j < n; ++j) {
        if (s[j] <= 0) throw DomainError("lecture hall sequences must be positive");
        rows[j][j] = make_rat(1, s[j]);
        if (j > 0) rows[j][j - 1] = make_rat(-1, s[j - 1]);
    }
    return RationalMatrix(std::move(rows));
}

TriangularCone::TriangularCone(RationalMatrix a) : a_(std::move(a)) {
    for (std::size_t i = 0; i < a_.size(); ++i) {
        if (a_(i, i) <= 0) {
            throw DomainError("diagonal entry " + std::to_string(i + 1) + " is not positive");
        }
        for (std::size_t j = i + 1; j < a_.size(); ++j) {
            if (a_(i, j) != 0) throw DomainError("matrix is not lower triangular");
        }
    }
}

GorensteinResult lecture_hall_gorenstein(std::span<const ExactInt> s) {
    if (s.empty()) throw DomainError("lecture hall cone needs n >= 1");
    for (const auto& term : s) {
        if (term <= 0) throw DomainError("lecture hall sequences must be positive");
    }
    std::vector<ExactInt> c{ExactInt(1)};
    c.reserve(s.size());
    for (std::size_t j = 1; j < s.size(); ++j) {
        const ExactInt numerator = c[j - 1] * s[j] + gcd(s[j], s[j - 1]);
        if (!divides(s[j - 1], numerator)) {
            return {GorensteinFailure{j + 1, make_rat(numerator, s[j - 1])}};
        }
        c.push_back(numerator / s[j - 1]);
    }
    return {GorensteinPoint{std::move(c)}};
}

std::optional<std::size_t> gorenstein_fail_index(const ExactInt& ell, const ExactInt& b,
                                                 std::size_t horizon) {
    if (horizon == 0) return std::nullopt;
    const Sequence s = generate_recurrence(ell, b, horizon);
    // One pass suffices: the recursion on a prefix is the prefix of the recursion.
    const GorensteinResult r = lecture_hall_gorenstein(s);
    if (r.is_gorenstein()) return std::nullopt;
    return r.failure().index;
}

std::vector<ExactInt> greedy_interior_point(const TriangularCone& cone) {
    const RationalMatrix& a = cone.matrix();
    std::vector<ExactInt> c;
    c.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        ExactRat partial = 0;
        for (std::size_t j = 0; j < i; ++j) partial += a(i, j) * ExactRat(c[j]);
        // Smallest integer x with partial + a_ii x > 0.
        ExactRat bound = -partial / a(i, i);
        c.push_back(floor(bound) + 1);
    }
    return c;
}

namespace {

// Positive generator of the subgroup of Q spanned by the row entries.
ExactRat row_generator(const std::vector<ExactRat>& row) {
    ExactInt common_den = 1;
    for (const auto& x : row) common_den = lcm(common_den, x.get_den());
    ExactInt g = 0;
    for (const auto& x : row) g = gcd(g, x.get_num() * (common_den / x.get_den()));
    return make_rat(g, common_den);
}

}  // namespace

GorensteinResult simple_cone_gorenstein(const RationalMatrix& a) {
    const std::size_t n = a.size();
    if (n == 0) throw DomainError("empty matrix");

    // Augmented system [A | q], solved by Gauss-Jordan elimination over Q.
    std::vector<std::vector<ExactRat>> m(n);
    for (std::size_t i = 0; i < n; ++i) {
        m[i] = a.row(i);
        ExactRat q = row_generator(a.row(i));
        if (q == 0) throw SingularMatrix("row " + std::to_string(i + 1) + " is zero");
        m[i].push_back(std::move(q));
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0) ++pivot;
        if (pivot == n) throw SingularMatrix("matrix is singular");
        std::swap(m[col], m[pivot]);
        const ExactRat inv = 1 / m[col][col];
        for (auto& x : m[col]) x *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0) continue;
            const ExactRat factor = m[r][col];
            for (std::size_t k = col; k <= n; ++k) m[r][k] -= factor * m[col][k];
        }
    }

    std::vector<ExactInt> point;
    point.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const ExactRat& value = m[i][n];
        if (!is_integral(value)) return {GorensteinFailure{i + 1, value}};
        point.push_back(value.get_num());
    }
    return {GorensteinPoint{std::move(point)}};
}

std::vector<ExactInt> ell_sequence_point(const ExactInt& ell, std::size_t n) {
    if (ell < 2) throw DomainError("l-sequences need l >= 2");
    const Sequence s = generate_ell(ell, n);
    std::vector<ExactInt> c;
    c.reserve(n);
    for (std::size_t i = 0; i < n; ++i) c.push_back(i == 0 ? s[0] : s[i - 1] + s[i]);
    return c;
}

std::vector<ExactInt> u_generated_point(std::span<const ExactInt> u, std::size_t n,
                                        const ExactInt& s1) {
    generate_from_u(u, s1, n);
    std::vector<ExactInt> c;
    if (n == 0) return c;
    c.push_back(1);
    if (n >= 2) c.push_back(u[0]);
    for (std::size_t i = 2; i < n; ++i) c.push_back(u[i - 1] * c[i - 1] - c[i - 2]);
    return c;
}

}  // namespace lhcone
