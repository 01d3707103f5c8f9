#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lhcone/errors.hpp"
#include "lhcone/sequences.hpp"
#include "oracles.hpp"

using namespace lhcone;
using oracle::ints;

TEST_CASE("second order recurrences") {
    CHECK(generate_recurrence(3, 9, 6) == ints({1, 3, 18, 81, 405, 1944}));
    CHECK(generate_recurrence(2, -1, 5) == ints({1, 2, 3, 4, 5}));
    CHECK(generate_recurrence(1, 1, 5) == ints({1, 1, 2, 3, 5}));
    CHECK_THROWS_AS(generate_recurrence(2, -2, 4), DomainError);
}

TEST_CASE("b = 0 gives powers of l") {
    for (long ell = 1; ell <= 6; ++ell) {
        const auto s = generate_recurrence(ell, 0, 8);
        for (std::size_t i = 0; i < s.size(); ++i) CHECK(s[i] == pow(ExactInt(ell), i));
    }
}

TEST_CASE("positivity criterion") {
    CHECK(validate_positivity(1, 1));
    CHECK_FALSE(validate_positivity(-2, 1));
    CHECK_FALSE(validate_positivity(2, -2));
    CHECK(validate_positivity(4, 0));
    // Compare with the first 40 terms directly.
    for (long ell = -3; ell <= 8; ++ell) {
        for (long b = -20; b <= 20; ++b) {
            ExactInt prev = 0, cur = 1;
            bool positive = true;
            for (int j = 2; j <= 40 && positive; ++j) {
                ExactInt next = ell * cur + b * prev;
                prev = cur;
                cur = next;
                positive = cur > 0;
            }
            CHECK_MESSAGE(validate_positivity(ell, b) == positive, "l=" << ell << " b=" << b);
        }
    }
}

TEST_CASE("(k, l)-sequences") {
    CHECK(generate_kl(2, 2, 4) == ints({1, 2, 3, 4}));
    CHECK(generate_kl(3, 3, 4) == ints({1, 3, 8, 21}));
    CHECK(generate_kl(2, 3, 4) == ints({1, 3, 5, 12}));
    CHECK_THROWS_AS(generate_kl(1, 3, 4), DomainError);
    for (long ell = 2; ell <= 7; ++ell) {
        CHECK(generate_kl(ell, ell, 12) == generate_recurrence(ell, -1, 12));
        CHECK(generate_ell(ell, 12) == generate_recurrence(ell, -1, 12));
    }
}

TEST_CASE("product exponents") {
    CHECK(kl_product_exponents(2, 2, 4) == ints({1, 3, 5, 7}));
    CHECK(kl_product_exponents(3, 3, 3) == ints({1, 4, 11}));
    CHECK(kl_product_exponents(2, 2, 1) == ints({1}));
}

TEST_CASE("one mod k") {
    CHECK(generate_one_mod_k(3, 4) == ints({1, 4, 7, 10}));
    CHECK_THROWS_AS(generate_one_mod_k(0, 3), DomainError);
}

TEST_CASE("u-generation recognition") {
    auto rec = recognize_u_generated(ints({1, 3, 2, 1, 3, 2}));
    REQUIRE(std::holds_alternative<UGeneration>(rec));
    CHECK(std::get<UGeneration>(rec).u == ints({4, 1, 2, 5, 1}));

    for (long k = 1; k <= 6; ++k) {
        rec = recognize_u_generated(ints({1, k + 1, 2 * k + 1, 3 * k + 1}));
        REQUIRE(std::holds_alternative<UGeneration>(rec));
        CHECK(std::get<UGeneration>(rec).u == ints({k + 2, 2, 2}));
    }

    rec = recognize_u_generated(ints({1, 1, 2, 3, 5}));
    REQUIRE(std::holds_alternative<NotUGenerated>(rec));
    CHECK(std::get<NotUGenerated>(rec).index == 4);
    CHECK(std::get<NotUGenerated>(rec).quotient == make_rat(7, 3));

    rec = recognize_u_generated(ints({1, 2, 4}));
    REQUIRE(std::holds_alternative<CoprimalityViolation>(rec));
    CHECK(std::get<CoprimalityViolation>(rec).index == 2);
    CHECK(std::get<CoprimalityViolation>(rec).gcd == 2);
}

TEST_CASE("generation from u") {
    CHECK(generate_from_u(ints({4, 1, 2, 5, 1}), 1, 6) == ints({1, 3, 2, 1, 3, 2}));
    CHECK(generate_from_u(ints({3}), 1, 2) == ints({1, 2}));
    for (long k = 2; k <= 4; ++k) {
        for (long ell = 2; ell <= 4; ++ell) {
            CHECK(generate_from_u(ints({ell + 1, k, ell, k, ell, k, ell}), 1, 8) == generate_kl(k, ell, 8));
        }
    }
    try {
        generate_from_u(ints({2, 1, 1}), 1, 4);
        FAIL("expected a nonpositive term");
    } catch (const NonPositiveTerm& e) {
        CHECK(e.index() == 3);
    }
}

TEST_CASE("u round trip") {
    for (long s1 = 1; s1 <= 3; ++s1) {
        for (long a = 1; a <= 9; ++a) {
            for (long b = 1; b <= 9; ++b) {
                for (long c = 1; c <= 9; ++c) {
                    const auto s = ints({s1, a, b, c});
                    const auto rec = recognize_u_generated(s);
                    if (const auto* g = std::get_if<UGeneration>(&rec)) {
                        CHECK(generate_from_u(g->u, s1, 4) == s);
                    }
                }
            }
        }
    }
}

TEST_CASE("spec parsing") {
    CHECK(realize(parse_sequence_spec("rec:3,9"), 7) == ints({1, 3, 18, 81, 405, 1944, 9477}));
    CHECK(realize(parse_sequence_spec("list:1,3,5"), std::nullopt) == ints({1, 3, 5}));
    CHECK(realize(parse_sequence_spec("u:4,1,2,5,1;1"), std::nullopt) == ints({1, 3, 2, 1, 3, 2}));
    CHECK(realize(parse_sequence_spec("u:3"), std::nullopt) == ints({1, 2}));
    CHECK(realize(parse_sequence_spec("kl:2,3"), 4) == ints({1, 3, 5, 12}));
    CHECK(realize(parse_sequence_spec("ell:3"), 4) == ints({1, 3, 8, 21}));
    CHECK(realize(parse_sequence_spec("onemodk:2"), 3) == ints({1, 3, 5}));
    CHECK_THROWS_AS(realize(parse_sequence_spec("list:1,2"), 3), DomainError);
    CHECK_THROWS_AS(realize(parse_sequence_spec("rec:2,-1"), std::nullopt), DomainError);
    CHECK_THROWS_AS(parse_sequence_spec("list:1,0,2"), ParseError);

    for (const char* text : {"rec:3,9", "kl:2,3", "ell:4", "u:4,1,2;1", "onemodk:5", "list:1,3,5,7"}) {
        CHECK(parse_sequence_spec(parse_sequence_spec(text).to_text()).to_text() == text);
    }

    try {
        parse_sequence_spec("rec:3,x9");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 6);
    }
    CHECK_THROWS_AS(parse_sequence_spec("bogus:1"), ParseError);
    CHECK_THROWS_AS(parse_sequence_spec("kl:3"), ParseError);
}
