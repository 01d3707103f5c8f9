#include "lhcone/exact_arith.hpp"

#include "lhcone/errors.hpp"

#include <algorithm>
#include <cctype>

namespace lhcone {

ExactInt gcd(const ExactInt& a, const ExactInt& b) {
    ExactInt g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

ExactInt lcm(const ExactInt& a, const ExactInt& b) {
    ExactInt l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

ExactInt pow(const ExactInt& base, unsigned long exponent) {
    ExactInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
    return r;
}

ExactInt floor_div(const ExactInt& a, const ExactInt& b) {
    if (b == 0) throw DomainError("division by zero");
    ExactInt q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

ExactInt ceil_div(const ExactInt& a, const ExactInt& b) {
    if (b == 0) throw DomainError("division by zero");
    ExactInt q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

bool divides(const ExactInt& d, const ExactInt& n) {
    if (d == 0) return n == 0;
    return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

ExactRat make_rat(const ExactInt& num, const ExactInt& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    ExactRat q(num, den);
    q.canonicalize();
    return q;
}

bool is_integral(const ExactRat& q) { return q.get_den() == 1; }

ExactInt floor(const ExactRat& q) { return floor_div(q.get_num(), q.get_den()); }

ExactInt parse_int(std::string_view text, std::size_t offset) {
    if (text.empty()) throw ParseError("expected an integer", offset);
    std::size_t i = 0;
    if (text[0] == '+' || text[0] == '-') ++i;
    if (i == text.size()) throw ParseError("sign without digits", offset + i);
    for (std::size_t j = i; j < text.size(); ++j) {
        if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
            throw ParseError("unexpected character '" + std::string(1, text[j]) + "'",
                             offset + j);
        }
    }
    std::string digits(text.substr(text[0] == '+' ? 1 : 0));
    return ExactInt(digits, 10);
}

ExactRat parse_rat(std::string_view text, std::size_t offset) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return ExactRat(parse_int(text, offset));
    ExactInt num = parse_int(text.substr(0, slash), offset);
    ExactInt den = parse_int(text.substr(slash + 1), offset + slash + 1);
    if (den == 0) throw ParseError("zero denominator", offset + slash + 1);
    return make_rat(num, den);
}

std::string to_string(const ExactInt& v) { return v.get_str(10); }

std::string to_string(const ExactRat& v) {
    if (v.get_den() == 1) return v.get_num().get_str(10);
    return v.get_num().get_str(10) + "/" + v.get_den().get_str(10);
}

std::size_t to_size(const ExactInt& v, std::string_view what) {
    if (v < 0 || !v.fits_ulong_p()) {
        throw DomainError(std::string(what) + " out of range: " + to_string(v));
    }
    return static_cast<std::size_t>(v.get_ui());
}

// DensePoly

DensePoly::DensePoly(std::vector<ExactInt> coeffs) : coeffs_(std::move(coeffs)) { strip(); }

void DensePoly::strip() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

DensePoly DensePoly::one_minus_q_pow(std::size_t e) {
    if (e == 0) return DensePoly{};
    std::vector<ExactInt> c(e + 1, ExactInt(0));
    c[0] = 1;
    c[e] = -1;
    return DensePoly(std::move(c));
}

DensePoly DensePoly::constant(const ExactInt& c) { return DensePoly(std::vector<ExactInt>{c}); }

ExactInt DensePoly::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : ExactInt(0);
}

ExactInt DensePoly::value_at_one() const {
    ExactInt sum = 0;
    for (const auto& c : coeffs_) sum += c;
    return sum;
}

DensePoly DensePoly::reversed() const {
    std::vector<ExactInt> c(coeffs_.rbegin(), coeffs_.rend());
    return DensePoly(std::move(c));
}

DensePoly operator+(const DensePoly& a, const DensePoly& b) {
    std::vector<ExactInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()), ExactInt(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
    return DensePoly(std::move(c));
}

DensePoly operator-(const DensePoly& a, const DensePoly& b) {
    std::vector<ExactInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()), ExactInt(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
    return DensePoly(std::move(c));
}

DensePoly operator*(const DensePoly& a, const DensePoly& b) {
    if (a.is_zero() || b.is_zero()) return DensePoly{};
    std::vector<ExactInt> c(a.coeffs_.size() + b.coeffs_.size() - 1, ExactInt(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return DensePoly(std::move(c));
}

// TruncatedSeries

TruncatedSeries::TruncatedSeries(std::vector<ExactInt> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw DomainError("truncated series needs at least one coefficient");
}

TruncatedSeries TruncatedSeries::one(std::size_t truncation_degree) {
    std::vector<ExactInt> c(truncation_degree + 1, ExactInt(0));
    c[0] = 1;
    return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::from_poly(const DensePoly& p, std::size_t truncation_degree) {
    std::vector<ExactInt> c(truncation_degree + 1, ExactInt(0));
    const auto& pc = p.coeffs();
    for (std::size_t i = 0; i < pc.size() && i <= truncation_degree; ++i) c[i] = pc[i];
    return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::divided_by_one_minus_q_pow(std::size_t e) const {
    if (e == 0) throw DomainError("cannot divide by 1 - q^0");
    std::vector<ExactInt> c = coeffs_;
    for (std::size_t i = e; i < c.size(); ++i) c[i] += c[i - e];
    return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::truncated(std::size_t truncation_degree) const {
    if (truncation_degree >= coeffs_.size()) {
        throw DomainError("cannot extend a truncated series beyond its known degree");
    }
    return TruncatedSeries(
        std::vector<ExactInt>(coeffs_.begin(), coeffs_.begin() + truncation_degree + 1));
}

DensePoly TruncatedSeries::to_poly() const { return DensePoly(coeffs_); }

bool TruncatedSeries::is_one() const {
    if (coeffs_[0] != 1) return false;
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const ExactInt& c) { return c == 0; });
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t m = std::min(a.truncation_degree(), b.truncation_degree());
    std::vector<ExactInt> c(m + 1, ExactInt(0));
    for (std::size_t i = 0; i <= m; ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; i + j <= m; ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return TruncatedSeries(std::move(c));
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t m = std::min(a.truncation_degree(), b.truncation_degree());
    return std::equal(a.coeffs_.begin(), a.coeffs_.begin() + m + 1, b.coeffs_.begin());
}

TruncatedSeries series_mul_poly(const TruncatedSeries& s, const DensePoly& p) {
    const std::size_t m = s.truncation_degree();
    const auto& sc = s.coeffs();
    const auto& pc = p.coeffs();
    std::vector<ExactInt> c(m + 1, ExactInt(0));
    for (std::size_t j = 0; j < pc.size() && j <= m; ++j) {
        if (pc[j] == 0) continue;
        for (std::size_t i = 0; i + j <= m; ++i) c[i + j] += sc[i] * pc[j];
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries product_form_series(std::span<const ExactInt> exponents, std::size_t M) {
    for (const auto& e : exponents) {
        if (e <= 0) throw DomainError("product-form exponent must be positive, got " + to_string(e));
    }
    TruncatedSeries s = TruncatedSeries::one(M);
    for (const auto& e : exponents) {
        // 1/(1 - q^e) is the identity through degree M when e > M.
        if (!e.fits_ulong_p() || e.get_ui() > M) continue;
        s = s.divided_by_one_minus_q_pow(e.get_ui());
    }
    return s;
}

bool is_palindromic(const DensePoly& p) {
    const auto& c = p.coeffs();
    return std::equal(c.begin(), c.begin() + c.size() / 2, c.rbegin());
}

bool is_unimodal(const DensePoly& p) {
    const auto& c = p.coeffs();
    std::size_t i = 1;
    while (i < c.size() && c[i - 1] <= c[i]) ++i;
    while (i < c.size() && c[i - 1] >= c[i]) ++i;
    return i >= c.size();
}

}  // namespace lhcone
