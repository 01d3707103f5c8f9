#include "lhcone/sequences.hpp"

#include "lhcone/errors.hpp"

#include <utility>

namespace lhcone {

namespace {

struct Field {
    std::string_view text;
    std::size_t offset;
};

std::vector<Field> split(std::string_view text, char sep, std::size_t offset) {
    std::vector<Field> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || text[i] == sep) {
            out.push_back({text.substr(start, i - start), offset + start});
            start = i + 1;
        }
    }
    return out;
}

std::vector<ExactInt> parse_int_list(std::string_view text, std::size_t offset) {
    std::vector<ExactInt> values;
    for (const auto& f : split(text, ',', offset)) values.push_back(parse_int(f.text, f.offset));
    return values;
}

std::vector<ExactInt> parse_exact_count(std::string_view text, std::size_t offset,
                                        std::size_t count, std::string_view name) {
    auto values = parse_int_list(text, offset);
    if (values.size() != count) {
        throw ParseError(std::string(name) + " expects " + std::to_string(count) + " parameter(s), got " +
                             std::to_string(values.size()),
                         offset);
    }
    return values;
}

void require(bool ok, const std::string& what, std::size_t offset) {
    if (!ok) throw ParseError(what, offset);
}

std::string join(const std::vector<ExactInt>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        out += to_string(values[i]);
    }
    return out;
}

void require_positive_terms(std::span<const ExactInt> s) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] <= 0) {
            throw DomainError("sequence term s_" + std::to_string(i + 1) + " = " + to_string(s[i]) +
                              " is not positive");
        }
    }
}

}  // namespace

std::optional<std::size_t> SequenceSpec::natural_length() const {
    if (const auto* e = std::get_if<ExplicitSeq>(&kind)) return e->terms.size();
    if (const auto* u = std::get_if<UGeneratedSeq>(&kind)) return u->u.size() + 1;
    return std::nullopt;
}

std::string SequenceSpec::to_text() const {
    struct Visitor {
        std::string operator()(const ExplicitSeq& e) const { return "list:" + join(e.terms); }
        std::string operator()(const RecurrenceSeq& r) const {
            return "rec:" + to_string(r.ell) + "," + to_string(r.b);
        }
        std::string operator()(const KlSeq& k) const {
            return "kl:" + to_string(k.k) + "," + to_string(k.ell);
        }
        std::string operator()(const EllSeq& e) const { return "ell:" + to_string(e.ell); }
        std::string operator()(const UGeneratedSeq& u) const {
            return "u:" + join(u.u) + ";" + to_string(u.s1);
        }
        std::string operator()(const OneModKSeq& o) const { return "onemodk:" + to_string(o.k); }
    };
    return std::visit(Visitor{}, kind);
}

SequenceSpec parse_sequence_spec(std::string_view text) {
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) throw ParseError("expected '<kind>:<parameters>'", 0);
    const std::string_view name = text.substr(0, colon);
    const std::string_view body = text.substr(colon + 1);
    const std::size_t at = colon + 1;
    require(!body.empty(), "missing parameters", at);

    if (name == "rec") {
        auto v = parse_exact_count(body, at, 2, "rec");
        require(validate_positivity(v[0], v[1]),
                "rec:l,b needs l > 0 and l^2 + 4b >= 0 for positive terms", at);
        return {RecurrenceSeq{v[0], v[1]}};
    }
    if (name == "kl") {
        auto v = parse_exact_count(body, at, 2, "kl");
        require(v[0] >= 2 && v[1] >= 2, "kl:k,l needs k, l >= 2", at);
        return {KlSeq{v[0], v[1]}};
    }
    if (name == "ell") {
        auto v = parse_exact_count(body, at, 1, "ell");
        require(v[0] >= 2, "ell:l needs l >= 2", at);
        return {EllSeq{v[0]}};
    }
    if (name == "onemodk") {
        auto v = parse_exact_count(body, at, 1, "onemodk");
        require(v[0] >= 1, "onemodk:k needs k >= 1", at);
        return {OneModKSeq{v[0]}};
    }
    if (name == "list") {
        auto terms = parse_int_list(body, at);
        auto fields = split(body, ',', at);
        for (std::size_t i = 0; i < terms.size(); ++i) {
            require(terms[i] > 0, "list terms must be positive", fields[i].offset);
        }
        return {ExplicitSeq{std::move(terms)}};
    }
    if (name == "u") {
        const auto semi = body.find(';');
        ExactInt s1 = 1;
        std::string_view u_text = body;
        if (semi != std::string_view::npos) {
            u_text = body.substr(0, semi);
            s1 = parse_int(body.substr(semi + 1), at + semi + 1);
            require(s1 > 0, "s1 must be positive", at + semi + 1);
        }
        std::vector<ExactInt> u;
        if (!u_text.empty()) {
            u = parse_int_list(u_text, at);
            auto fields = split(u_text, ',', at);
            for (std::size_t i = 0; i < u.size(); ++i) {
                require(u[i] > 0, "u entries must be positive", fields[i].offset);
            }
        }
        return {UGeneratedSeq{std::move(u), s1}};
    }
    throw ParseError("unknown sequence kind '" + std::string(name) + "'", 0);
}

Sequence realize(const SequenceSpec& spec, std::optional<std::size_t> n) {
    const auto natural = spec.natural_length();
    if (!n) n = natural;
    if (!n) throw DomainError("sequence '" + spec.to_text() + "' needs an explicit length");
    if (*n == 0) throw DomainError("sequence length must be at least 1");
    if (natural && *n > *natural) {
        throw DomainError("requested length " + std::to_string(*n) + " exceeds the " +
                          std::to_string(*natural) + " terms of '" + spec.to_text() + "'");
    }

    struct Visitor {
        std::size_t n;
        Sequence operator()(const ExplicitSeq& e) const {
            return Sequence(e.terms.begin(), e.terms.begin() + static_cast<std::ptrdiff_t>(n));
        }
        Sequence operator()(const RecurrenceSeq& r) const { return generate_recurrence(r.ell, r.b, n); }
        Sequence operator()(const KlSeq& k) const { return generate_kl(k.k, k.ell, n); }
        Sequence operator()(const EllSeq& e) const { return generate_ell(e.ell, n); }
        Sequence operator()(const UGeneratedSeq& u) const { return generate_from_u(u.u, u.s1, n); }
        Sequence operator()(const OneModKSeq& o) const { return generate_one_mod_k(o.k, n); }
    };
    Sequence s = std::visit(Visitor{*n}, spec.kind);
    require_positive_terms(s);
    return s;
}

bool validate_positivity(const ExactInt& ell, const ExactInt& b) {
    return ell > 0 && ell * ell + 4 * b >= 0;
}

Sequence generate_recurrence(const ExactInt& ell, const ExactInt& b, std::size_t n) {
    if (!validate_positivity(ell, b)) {
        throw DomainError("recurrence (l=" + to_string(ell) + ", b=" + to_string(b) +
                          ") does not produce positive terms");
    }
    Sequence s;
    s.reserve(n);
    if (b == 0) {
        ExactInt term = 1;
        for (std::size_t i = 0; i < n; ++i, term *= ell) s.push_back(term);
        return s;
    }
    ExactInt prev = 0;
    ExactInt cur = 1;
    for (std::size_t i = 0; i < n; ++i) {
        s.push_back(cur);
        ExactInt next = ell * cur + b * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return s;
}

namespace {

// a_0..a_n of the alternating recurrence; index 0 included.
Sequence kl_with_zero(const ExactInt& k, const ExactInt& ell, std::size_t n) {
    if (k < 2 || ell < 2) {
        throw DomainError("(k,l)-sequences need k, l >= 2 (got k=" + to_string(k) +
                          ", l=" + to_string(ell) + ")");
    }
    Sequence a{ExactInt(0), ExactInt(1)};
    for (std::size_t i = 2; i <= n; ++i) {
        const ExactInt& coeff = (i % 2 == 0) ? ell : k;
        a.push_back(coeff * a[i - 1] - a[i - 2]);
    }
    a.resize(n + 1);
    return a;
}

}  // namespace

Sequence generate_kl(const ExactInt& k, const ExactInt& ell, std::size_t n) {
    Sequence a = kl_with_zero(k, ell, n);
    return Sequence(a.begin() + 1, a.end());
}

Sequence generate_ell(const ExactInt& ell, std::size_t n) { return generate_kl(ell, ell, n); }

Sequence generate_one_mod_k(const ExactInt& k, std::size_t n) {
    if (k < 1) throw DomainError("1 mod k sequences need k >= 1");
    Sequence s;
    s.reserve(n);
    for (std::size_t i = 0; i < n; ++i) s.push_back(k * static_cast<unsigned long>(i) + 1);
    return s;
}

Sequence kl_product_exponents(const ExactInt& k, const ExactInt& ell, std::size_t n) {
    const Sequence a = kl_with_zero(k, ell, n);
    const Sequence b = kl_with_zero(ell, k, n);
    Sequence e;
    e.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) {
        e.push_back(n % 2 == 0 ? a[i] + b[i - 1] : b[i] + a[i - 1]);
    }
    return e;
}

URecognition recognize_u_generated(std::span<const ExactInt> s) {
    require_positive_terms(s);
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
        ExactInt g = gcd(s[i], s[i + 1]);
        if (g != 1) return CoprimalityViolation{i + 1, std::move(g)};
    }
    UGeneration gen;
    for (std::size_t i = 1; i < s.size(); ++i) {
        // u_i = (s_{i+1} + s_{i-1}) / s_i with s_0 standing in for 1 at i = 1.
        const ExactInt numerator = s[i] + (i == 1 ? ExactInt(1) : s[i - 2]);
        if (!divides(s[i - 1], numerator)) {
            return NotUGenerated{i, make_rat(numerator, s[i - 1])};
        }
        gen.u.push_back(numerator / s[i - 1]);
    }
    return gen;
}

Sequence generate_from_u(std::span<const ExactInt> u, const ExactInt& s1, std::size_t n) {
    if (n == 0) return {};
    if (u.size() + 1 < n) {
        throw DomainError("u has " + std::to_string(u.size()) + " entries; " + std::to_string(n) +
                          " terms need at least " + std::to_string(n - 1));
    }
    if (s1 <= 0) throw NonPositiveTerm(1);
    Sequence s{s1};
    for (std::size_t i = 1; i < n; ++i) {
        ExactInt next = u[i - 1] * s[i - 1] - (i == 1 ? ExactInt(1) : s[i - 2]);
        if (next <= 0) throw NonPositiveTerm(i + 1);
        s.push_back(std::move(next));
    }
    return s;
}

}  // namespace lhcone
