#pragma once

// Sequence families: second-order recurrences with seeds s_0 = 0, s_1 = 1,
// (k, l)-sequences, l-sequences, u-generated sequences, "1 mod k"
// sequences and explicit lists. Also the textual spec format used by the CLI:
//
//   rec:l,b   kl:k,l   ell:l   u:u1,u2,...;s1   onemodk:k   list:s1,s2,...

#include "lhcone/exact_arith.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace lhcone {

using Sequence = std::vector<ExactInt>;

struct ExplicitSeq {
    Sequence terms;
};
struct RecurrenceSeq {
    ExactInt ell;
    ExactInt b;
};
struct KlSeq {
    ExactInt k;
    ExactInt ell;
};
struct EllSeq {
    ExactInt ell;
};
struct UGeneratedSeq {
    std::vector<ExactInt> u;
    ExactInt s1;
};
struct OneModKSeq {
    ExactInt k;
};

struct SequenceSpec {
    std::variant<ExplicitSeq, RecurrenceSeq, KlSeq, EllSeq, UGeneratedSeq, OneModKSeq> kind;

    /// Length implied by the spec itself: the list length for `list:` and
    /// |u| + 1 for `u:`; none for the infinite families.
    std::optional<std::size_t> natural_length() const;
    /// Canonical text form; parse_sequence_spec(to_text()) round-trips.
    std::string to_text() const;
};

/// Throws ParseError carrying the offending character offset.
SequenceSpec parse_sequence_spec(std::string_view text);

/// Terms s_1..s_n of the spec. `n` defaults to natural_length(); an explicit
/// n longer than a finite spec is rejected. Every term is validated positive.
Sequence realize(const SequenceSpec& spec, std::optional<std::size_t> n);

/// s_j > 0 for all j >= 1 under s_j = l s_{j-1} + b s_{j-2}, s_0 = 0, s_1 = 1.
bool validate_positivity(const ExactInt& ell, const ExactInt& b);

Sequence generate_recurrence(const ExactInt& ell, const ExactInt& b, std::size_t n);
/// a_1..a_n of the (k, l)-sequence; requires k, l >= 2.
Sequence generate_kl(const ExactInt& k, const ExactInt& ell, std::size_t n);
Sequence generate_ell(const ExactInt& ell, std::size_t n);
/// 1, k+1, 2k+1, ..., (n-1)k+1; requires k >= 1.
Sequence generate_one_mod_k(const ExactInt& k, std::size_t n);

/// Exponents e_1..e_n of the product form of the (k, l)-sequence generating
/// function: a_i + b_{i-1} for even n, b_i + a_{i-1} for odd n, where b is
/// the (l, k)-sequence.
Sequence kl_product_exponents(const ExactInt& k, const ExactInt& ell, std::size_t n);

struct UGeneration {
    std::vector<ExactInt> u;  // u_1..u_{n-1}
};
/// No positive integer u exists; `index` is the 1-based i of the first u_i
/// that is not an integer, and `quotient` its rational value.
struct NotUGenerated {
    std::size_t index;
    ExactRat quotient;
};
/// gcd(s_index, s_{index+1}) != 1, so the recognizer does not apply.
struct CoprimalityViolation {
    std::size_t index;
    ExactInt gcd;
};
using URecognition = std::variant<UGeneration, NotUGenerated, CoprimalityViolation>;

URecognition recognize_u_generated(std::span<const ExactInt> s);

/// s_1 = s1, s_2 = u_1 s_1 - 1, s_{i+1} = u_i s_i - s_{i-1}. Throws
/// NonPositiveTerm at the first nonpositive term.
Sequence generate_from_u(std::span<const ExactInt> u, const ExactInt& s1, std::size_t n);

}  // namespace lhcone
