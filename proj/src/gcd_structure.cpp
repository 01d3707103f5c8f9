#include "lhcone/gcd_structure.hpp"

#include "lhcone/errors.hpp"
#include "lhcone/gorenstein.hpp"
#include "lhcone/sequences.hpp"

#include <algorithm>
#include <sstream>

namespace lhcone {

namespace {

void check(bool ok, const std::string& what) {
    if (!ok) throw InvariantViolation(what);
}

void require_recurrence(const ExactInt& ell, const ExactInt& b) {
    if (b == 0) throw DomainError("gcd structure needs b != 0");
    if (!validate_positivity(ell, b)) {
        throw DomainError("recurrence (l=" + to_string(ell) + ", b=" + to_string(b) +
                          ") does not produce positive terms");
    }
}

std::string params(const ExactInt& ell, const ExactInt& b) {
    return "(l=" + to_string(ell) + ", b=" + to_string(b) + ")";
}

}  // namespace

GcdProfile gcd_profile(const ExactInt& ell, const ExactInt& b) {
    if (ell == 0 || b == 0) throw DomainError("gcd profile needs l != 0 and b != 0");
    GcdProfile p;
    p.r = gcd(ell, b);
    p.t = gcd(ell * ell / p.r, b / p.r);
    p.sigma = p.r / p.t;
    p.gamma = ell / p.r;
    p.beta = b / (p.r * p.t);

    const std::string where = " for " + params(ell, b);
    check(p.r == p.sigma * p.t, "r != sigma t" + where);
    check(gcd(ell * ell, b) == p.r * p.t, "gcd(l^2, b) != r t" + where);
    check(ell == p.sigma * p.t * p.gamma, "l != sigma t gamma" + where);
    check(b == p.sigma * p.t * p.t * p.beta, "b != sigma t^2 beta" + where);
    check(gcd(p.gamma, p.beta) == 1, "gcd(gamma, beta) != 1" + where);
    check(gcd(p.gamma, p.t) == 1, "gcd(gamma, t) != 1" + where);
    check(gcd(p.sigma, p.beta) == 1, "gcd(sigma, beta) != 1" + where);
    return p;
}

std::string RatioTable::to_csv() const {
    std::ostringstream out;
    out << "n,gcd,normalizer,u_n\n";
    for (const auto& row : rows) {
        out << row.n << ',' << to_string(row.gcd) << ',' << to_string(row.normalizer) << ','
            << to_string(row.u) << '\n';
    }
    return out.str();
}

RatioTable ratio_table(const ExactInt& ell, const ExactInt& b, std::size_t N) {
    require_recurrence(ell, b);
    RatioTable table{ell, b, gcd_profile(ell, b), {}};
    const GcdProfile& p = table.profile;
    const Sequence s = generate_recurrence(ell, b, N + 1);

    table.rows.reserve(N);
    for (std::size_t n = 1; n <= N; ++n) {
        RatioRow row;
        row.n = n;
        row.gcd = gcd(s[n], s[n - 1]);
        row.normalizer = pow(p.t, n - 1) * pow(p.sigma, n / 2);
        check(divides(row.normalizer, row.gcd),
              "t^{n-1} sigma^{n/2} does not divide gcd(s_{n+1}, s_n) at n=" + std::to_string(n) +
                  " for " + params(ell, b));
        row.u = row.gcd / row.normalizer;
        check(divides(row.u, p.t),
              "u_n does not divide t at n=" + std::to_string(n) + " for " + params(ell, b));
        table.rows.push_back(std::move(row));
    }
    return table;
}

std::vector<ExactInt> f_sequence(const ExactInt& ell, const ExactInt& b, std::size_t n) {
    require_recurrence(ell, b);
    const GcdProfile p = gcd_profile(ell, b);
    const ExactInt a1 = ell / p.t;
    const ExactInt a2 = b / (p.t * p.t);
    check(a1 * p.t == ell && a2 * p.t * p.t == b, "l/t or b/t^2 is not an integer");

    // f_0..f_{n+1}; the extra term lets the gcd identity be checked at j = n.
    std::vector<ExactInt> f{ExactInt(0), ExactInt(1)};
    for (std::size_t j = 2; j <= n + 1; ++j) f.push_back(a1 * f[j - 1] + a2 * f[j - 2]);

    const Sequence s = generate_recurrence(ell, b, n + 1);
    for (std::size_t j = 1; j <= n; ++j) {
        check(s[j - 1] == pow(p.t, j - 1) * f[j],
              "s_j != t^{j-1} f_j at j=" + std::to_string(j) + " for " + params(ell, b));
        check(gcd(f[j + 1], f[j]) == pow(p.sigma, j / 2),
              "gcd(f_{j+1}, f_j) != sigma^{j/2} at j=" + std::to_string(j) + " for " +
                  params(ell, b));
    }
    return std::vector<ExactInt>(f.begin() + 1, f.begin() + 1 + static_cast<std::ptrdiff_t>(n));
}

N0Certificate find_n0(const ExactInt& ell, const ExactInt& b, std::optional<std::size_t> window,
                      std::size_t search_limit) {
    require_recurrence(ell, b);
    const GcdProfile p = gcd_profile(ell, b);
    const ExactInt bound = p.t * (p.r + abs(b));
    const ExactInt t_squared = p.t * p.t;

    // s_n / (t^{n-2} sigma^{floor((n-1)/2)}) > bound, cleared of denominators:
    //   s_n t^2 > bound t^n sigma^{floor((n-1)/2)}.
    ExactInt prev = 0;
    ExactInt cur = 1;
    ExactInt t_pow = p.t;
    std::size_t candidate = 1;
    std::optional<std::size_t> first_hit;
    for (std::size_t n = 1;; ++n) {
        const ExactInt rhs = bound * t_pow * pow(p.sigma, (n - 1) / 2);
        if (cur * t_squared > rhs) {
            if (!first_hit) first_hit = n;
            const std::size_t w = window.value_or(std::max<std::size_t>(64, 4 * *first_hit));
            if (n - candidate >= w) return N0Certificate{candidate, *first_hit, w, bound};
        } else {
            candidate = n + 1;
            if (candidate > search_limit) {
                throw HorizonTooSmall("no stable n0 <= " + std::to_string(search_limit) + " for " +
                                      params(ell, b));
            }
        }
        ExactInt next = ell * cur + b * prev;
        prev = std::move(cur);
        cur = std::move(next);
        t_pow *= p.t;
    }
}

FailureThresholdVerdict failure_threshold_check(const ExactInt& ell, const ExactInt& b) {
    require_recurrence(ell, b);
    if (b == -1) throw DomainError("b = -1 gives an l-sequence, which never fails");
    FailureThresholdVerdict v;
    v.applicable = gcd(ell, b) == gcd(ell * ell, b);
    v.threshold = b > 0 ? 5 : 6;
    if (v.applicable) v.actual = gorenstein_fail_index(ell, b, v.threshold);
    v.confirmed = v.applicable && v.actual.has_value() && *v.actual <= v.threshold;
    return v;
}

}  // namespace lhcone
