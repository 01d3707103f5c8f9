#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lhcone/enumeration.hpp"
#include "lhcone/errors.hpp"
#include "lhcone/gorenstein.hpp"
#include "lhcone/sequences.hpp"
#include "oracles.hpp"

#include <cstdlib>

using namespace lhcone;
using oracle::ints;

namespace {

std::vector<Sequence> small_corpus(std::size_t max_n, long max_entry) {
    std::vector<Sequence> out{{}};
    std::vector<Sequence> all;
    for (std::size_t n = 1; n <= max_n; ++n) {
        std::vector<Sequence> next;
        for (const auto& prefix : out) {
            for (long v = 1; v <= max_entry; ++v) {
                Sequence s = prefix;
                s.emplace_back(v);
                next.push_back(s);
                all.push_back(s);
            }
        }
        out = std::move(next);
    }
    return all;
}

bool in_cone(const std::vector<long>& lam, const std::vector<long>& s) {
    if (lam[0] < 0) return false;
    for (std::size_t j = 0; j + 1 < s.size(); ++j) {
        if (lam[j] * s[j + 1] > lam[j + 1] * s[j]) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("weight series examples") {
    CHECK(weight_series(ints({1, 2}), 6).series.coeffs() == ints({1, 1, 1, 2, 2, 2, 3}));
    CHECK(weight_series(ints({1, 2}), 6).series == product_form_series(ints({1, 3}), 6));
    CHECK(weight_series(ints({1}), 4).series.coeffs() == ints({1, 1, 1, 1, 1}));

    CHECK(in_cone({0, 3, 1, 2}, {1, 9, 3, 4}));
    CHECK(in_cone({0, 2, 1, 3}, {1, 9, 3, 4}));
    const auto f = weight_series(ints({1, 9, 3, 4}), 12);
    CHECK(f.series.coeffs() == oracle::weight_counts(ints({1, 9, 3, 4}), 12));
    CHECK(f.series[6] >= 2);
}

TEST_CASE("weight series against box enumeration") {
    for (const auto& s : small_corpus(4, 5)) {
        CHECK(weight_series(s, 18).series.coeffs() == oracle::weight_counts(s, 18));
    }
    for (const auto& s : {ints({1, 9, 3, 4}), ints({2, 7, 1}), ints({1, 3, 18, 81}), ints({5, 1, 5, 1, 5})}) {
        CHECK(weight_series(s, 25).series.coeffs() == oracle::weight_counts(s, 25));
    }
}

TEST_CASE("numerator of (1,3,5,7)") {
    const auto s = ints({1, 3, 5, 7});
    CHECK(denominator_exponents(s) == ints({16, 15, 12, 7}));
    const DensePoly h = numerator_H(s);
    // The reduced form (1-q+q^3-q^4+q^5-q^7+q^8) / ((1-q)^2 (1-q^12) (1-q^16))
    // fixes H = N (1-q^7) (1-q^15) / (1-q)^2; its q^14 coefficient is 7.
    CHECK(h.coeffs() == ints({1, 1, 1, 2, 2, 3, 4, 3, 4, 5, 5, 6, 6, 6, 7, 6, 6, 6, 5, 5, 4, 3, 4, 3, 2, 2, 1, 1, 1}));
    CHECK(h * DensePoly::one_minus_q_pow(1) * DensePoly::one_minus_q_pow(1) ==
          DensePoly(ints({1, -1, 0, 1, -1, 1, 0, -1, 1})) * DensePoly::one_minus_q_pow(7) *
              DensePoly::one_minus_q_pow(15));
    CHECK(h.degree() == 28);
    CHECK(h.value_at_one() == 105);
    CHECK(h.coeffs() == oracle::numerator(s));
}

TEST_CASE("numerator edge cases") {
    CHECK(numerator_H(ints({1})) == DensePoly::constant(1));
    for (std::size_t n = 1; n <= 5; ++n) {
        Sequence s;
        Sequence odd;
        for (std::size_t i = 1; i <= n; ++i) {
            s.emplace_back(static_cast<unsigned long>(i));
            odd.emplace_back(static_cast<unsigned long>(2 * i - 1));
        }
        // H / prod(1 - q^{d_i}) must reduce to prod 1/(1 - q^{2i-1}).
        const DensePoly h = numerator_H(s);
        DensePoly lhs = h;
        for (const auto& e : odd) lhs = lhs * DensePoly::one_minus_q_pow(e.get_ui());
        DensePoly rhs = DensePoly::constant(1);
        for (const auto& d : denominator_exponents(s)) rhs = rhs * DensePoly::one_minus_q_pow(d.get_ui());
        CHECK(lhs == rhs);
    }
}

TEST_CASE("numerator reconstructs the series") {
    for (const auto& s : small_corpus(4, 5)) {
        const DensePoly h = numerator_H(s);
        CHECK(h.value_at_one() == [&] {
            ExactInt p = 1;
            for (const auto& x : s) p *= x;
            return p;
        }());
        const std::size_t M = 60;
        TruncatedSeries f = TruncatedSeries::from_poly(h, M);
        for (const auto& d : denominator_exponents(s)) f = f.divided_by_one_minus_q_pow(d.get_ui());
        CHECK(f == weight_series(s, M).series);
        if (s.size() <= 3) CHECK(h.coeffs() == oracle::numerator(s));
    }
}

TEST_CASE("product form detection") {
    auto e = detect_product_form(weight_series(ints({1, 2, 3, 4}), 64), 4);
    REQUIRE(e.has_value());
    CHECK(*e == ints({1, 3, 5, 7}));

    e = detect_product_form(weight_series(ints({1, 3, 8}), 64), 3);
    REQUIRE(e.has_value());
    CHECK(*e == ints({1, 4, 11}));

    CHECK_FALSE(detect_product_form(weight_series(ints({1, 3, 5, 7}), 100), 4).has_value());
}

TEST_CASE("product form exponents are the l-sequence points") {
    for (long ell = 2; ell <= 4; ++ell) {
        for (std::size_t n = 1; n <= 5; ++n) {
            const auto point = ell_sequence_point(ell, n);
            ExactInt total = 0;
            for (const auto& x : point) total += x;
            const auto e = detect_product_form(weight_series(generate_ell(ell, n), to_size(2 * total, "M")), n);
            REQUIRE(e.has_value());
            CHECK(*e == point);
        }
    }
}

TEST_CASE("(k, l) product forms") {
    for (long k = 2; k <= 4; ++k) {
        for (long ell = 2; ell <= 4; ++ell) {
            for (std::size_t n = 1; n <= 5; ++n) {
                const auto exponents = kl_product_exponents(k, ell, n);
                CHECK(weight_series(generate_kl(k, ell, n), 80).series == product_form_series(exponents, 80));
            }
        }
    }
}

TEST_CASE("Ehrhart counts") {
    CHECK(ehrhart_counts(ints({1}), 3).back() == 4);
    CHECK(ehrhart_counts(ints({1, 3, 5}), 0).back() == 1);
    // Only (0,0) and (0,1): lambda_1 <= lambda_2 / 2 forces lambda_1 = 0.
    CHECK(ehrhart_counts(ints({1, 2}), 1) == ints({1, 2}));
    CHECK(oracle::ehrhart(ints({1, 2}), 1) == ints({1, 2}));

    for (const auto& s : small_corpus(4, 5)) {
        const auto counts = ehrhart_counts(s, 24);
        CHECK(counts == oracle::ehrhart(s, 24));
        for (std::size_t t = 1; t < counts.size(); ++t) CHECK(counts[t] >= counts[t - 1]);
    }
}

TEST_CASE("h* vectors") {
    const auto q = h_star(ints({1, 3, 5}));
    CHECK(q.coeffs.coeffs() == ints({1, 2, 4, 6, 9, 10, 11, 10, 9, 6, 4, 2, 1}));
    CHECK(q.coeffs.value_at_one() == 75);
    CHECK(q.denominator_exponent == 5);
    CHECK(q.power == 4);
    CHECK(q.symmetric());
    CHECK(q.unimodal());
    CHECK(h_star(ints({1})).coeffs == DensePoly::constant(1));

    for (const auto& s : small_corpus(3, 5)) {
        const auto h = h_star(s);
        CHECK(h.coeffs.coeffs() == oracle::h_star(s));
        for (const auto& c : h.coeffs.coeffs()) CHECK(c > 0);
    }
}

TEST_CASE("cross check") {
    auto r = cross_check_gorenstein(ints({1, 3, 5, 7}));
    CHECK(r.cone_gorenstein);
    CHECK(r.numerator_palindromic);
    CHECK(r.h_star_symmetric);

    r = cross_check_gorenstein(ints({1, 1, 2, 3, 5}));
    CHECK_FALSE(r.cone_gorenstein);
    CHECK_FALSE(r.numerator_palindromic);
    CHECK_FALSE(r.h_star_symmetric);

    r = cross_check_gorenstein(ints({1, 3, 2, 1, 3, 2}));
    CHECK(r.cone_gorenstein);
    CHECK(r.numerator_palindromic);
    CHECK(r.h_star_symmetric);

    for (const auto& s : small_corpus(4, 5)) CHECK(cross_check_gorenstein(s).agree());
}

TEST_CASE("budgets") {
    EnumerationBudget tiny;
    tiny.max_nodes = 50;
    CHECK_THROWS_AS(weight_series(ints({1, 3, 5, 7}), 60, tiny), BudgetExceeded);
    EnumerationBudget shallow;
    shallow.max_degree = 40;
    CHECK_THROWS_AS(numerator_H(ints({1, 3, 5, 7}), shallow), BudgetExceeded);
    CHECK_THROWS_AS(cross_check_gorenstein(ints({1, 3, 5, 7}), shallow), BudgetExceeded);

    setenv("LHCONE_BUDGET", "1234", 1);
    CHECK(EnumerationBudget::from_environment().max_nodes == 1234);
    setenv("LHCONE_BUDGET", "-3", 1);
    CHECK_THROWS_AS(EnumerationBudget::from_environment(), DomainError);
    unsetenv("LHCONE_BUDGET");
    CHECK(EnumerationBudget::from_environment().max_nodes == EnumerationBudget{}.max_nodes);
}
