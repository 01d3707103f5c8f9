#include "lhcone/enumeration.hpp"

#include "lhcone/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <string>

namespace lhcone {

namespace {

using i64 = std::int64_t;
__extension__ typedef __int128 i128;

// Coordinates beyond this are treated as "too large to matter"; every bound
// the walkers compare against is far smaller.
constexpr i64 kSaturated = std::numeric_limits<i64>::max() / 4;

std::vector<i64> to_machine(std::span<const ExactInt> s) {
    if (s.empty()) throw DomainError("enumeration needs n >= 1");
    std::vector<i64> out;
    out.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] <= 0) throw DomainError("lecture hall sequences must be positive");
        if (!s[i].fits_slong_p() || s[i].get_si() > kSaturated) {
            throw BudgetExceeded("term s_" + std::to_string(i + 1) + " is too large to enumerate");
        }
        out.push_back(s[i].get_si());
    }
    return out;
}

std::size_t checked_degree(const ExactInt& degree, const EnumerationBudget& budget,
                           const std::string& what) {
    if (!degree.fits_ulong_p() || degree.get_ui() > budget.max_degree) {
        throw BudgetExceeded(what + " " + to_string(degree) + " exceeds the degree budget of " +
                             std::to_string(budget.max_degree));
    }
    return degree.get_ui();
}

// Walks the lattice points of the lecture hall cone coordinate by coordinate.
class ConeWalker {
public:
    ConeWalker(std::vector<i64> s, const EnumerationBudget& budget)
        : s_(std::move(s)), max_nodes_(budget.max_nodes) {}

    std::size_t dimension() const { return s_.size(); }

    // Smallest admissible lambda_{i+1} given lambda_i = v: ceil(v s_{i+1} / s_i).
    i64 next_min(std::size_t i, i64 v) const {
        const i128 num = static_cast<i128>(v) * s_[i + 1];
        const i128 q = (num + s_[i] - 1) / s_[i];
        return q > kSaturated ? kSaturated : static_cast<i64>(q);
    }

    // Histogram of weights |lambda| <= max_weight, as a difference array.
    std::vector<i64> weight_histogram(i64 max_weight) {
        max_value_ = max_weight;
        diff_.assign(static_cast<std::size_t>(max_weight) + 2, 0);
        walk_weights(0, 0, 0);
        return prefix_sums();
    }

    // Histogram of the last coordinate over points with lambda_n <= max_last.
    std::vector<i64> last_coordinate_histogram(i64 max_last) {
        max_value_ = max_last;
        diff_.assign(static_cast<std::size_t>(max_last) + 2, 0);
        walk_heights(0, 0);
        return prefix_sums();
    }

private:
    void tick() {
        if (++nodes_ > max_nodes_) {
            throw BudgetExceeded("enumeration exceeded the node budget of " +
                                 std::to_string(max_nodes_));
        }
    }

    // Whether the cheapest completion of lambda_{i+1..n} after lambda_i = v
    // has weight at most `room`.
    bool completion_fits(std::size_t i, i64 v, i64 room) const {
        i64 m = v;
        i64 total = 0;
        for (std::size_t j = i + 1; j < s_.size(); ++j) {
            m = next_min(j - 1, m);
            total += m;
            if (total > room) return false;
        }
        return true;
    }

    // Smallest admissible lambda_n after lambda_i = v.
    i64 last_min(std::size_t i, i64 v) const {
        for (std::size_t j = i + 1; j < s_.size() && v < kSaturated; ++j) v = next_min(j - 1, v);
        return v;
    }

    void walk_weights(std::size_t i, i64 lo, i64 partial) {
        tick();
        if (i + 1 == s_.size()) {
            // lambda_n ranges over [lo, max - partial]; weights partial+lo .. max.
            if (partial + lo <= max_value_) {
                diff_[static_cast<std::size_t>(partial + lo)] += 1;
                diff_[static_cast<std::size_t>(max_value_) + 1] -= 1;
            }
            return;
        }
        for (i64 v = lo; partial + v <= max_value_; ++v) {
            if (!completion_fits(i, v, max_value_ - partial - v)) break;
            walk_weights(i + 1, next_min(i, v), partial + v);
        }
    }

    void walk_heights(std::size_t i, i64 lo) {
        tick();
        if (i + 1 == s_.size()) {
            if (lo <= max_value_) {
                diff_[static_cast<std::size_t>(lo)] += 1;
                diff_[static_cast<std::size_t>(max_value_) + 1] -= 1;
            }
            return;
        }
        for (i64 v = lo;; ++v) {
            if (last_min(i, v) > max_value_) break;
            walk_heights(i + 1, next_min(i, v));
        }
    }

    std::vector<i64> prefix_sums() const {
        std::vector<i64> out(diff_.size() - 1);
        i64 running = 0;
        for (std::size_t k = 0; k < out.size(); ++k) {
            running += diff_[k];
            out[k] = running;
        }
        return out;
    }

    std::vector<i64> s_;
    std::uint64_t max_nodes_;
    std::uint64_t nodes_ = 0;
    i64 max_value_ = 0;
    std::vector<i64> diff_;
};

// In-place multiplication of a truncated coefficient vector by (1 - q^e).
void times_one_minus_q_pow(std::vector<ExactInt>& c, std::size_t e) {
    for (std::size_t i = c.size(); i-- > e;) c[i] -= c[i - e];
}

ExactInt product(std::span<const ExactInt> s) {
    ExactInt p = 1;
    for (const auto& x : s) p *= x;
    return p;
}

}  // namespace

EnumerationBudget EnumerationBudget::from_environment() {
    EnumerationBudget budget;
    if (const char* env = std::getenv("LHCONE_BUDGET"); env && *env) {
        const ExactInt value = parse_int(env);
        if (value <= 0 || !value.fits_ulong_p()) {
            throw DomainError("LHCONE_BUDGET must be a positive integer");
        }
        budget.max_nodes = value.get_ui();
    }
    return budget;
}

WeightSeries weight_series(std::span<const ExactInt> s, std::size_t M,
                           const EnumerationBudget& budget) {
    checked_degree(ExactInt(static_cast<unsigned long>(M)), budget, "truncation degree");
    ConeWalker walker(to_machine(s), budget);
    const auto hist = walker.weight_histogram(static_cast<i64>(M));
    std::vector<ExactInt> coeffs;
    coeffs.reserve(hist.size());
    for (i64 c : hist) coeffs.emplace_back(static_cast<long>(c));
    return WeightSeries{TruncatedSeries(std::move(coeffs))};
}

std::vector<ExactInt> denominator_exponents(std::span<const ExactInt> s) {
    std::vector<ExactInt> d(s.size());
    ExactInt tail = 0;
    for (std::size_t i = s.size(); i-- > 0;) {
        tail += s[i];
        d[i] = tail;
    }
    return d;
}

DensePoly numerator_H(std::span<const ExactInt> s, const EnumerationBudget& budget) {
    const auto d = denominator_exponents(s);
    ExactInt total = 0;
    for (const auto& x : d) total += x;
    const std::size_t D = checked_degree(total, budget, "numerator degree bound");

    std::vector<ExactInt> c = weight_series(s, D, budget).series.coeffs();
    for (const auto& e : d) times_one_minus_q_pow(c, e.get_ui());

    if (c[D] != 0) throw InvariantViolation("H(q) reaches the degree of its denominator");
    for (const auto& x : c) {
        if (x < 0) throw InvariantViolation("H(q) has a negative coefficient");
    }
    DensePoly h(std::move(c));
    if (h.value_at_one() != product(s)) throw InvariantViolation("H(1) != s_1 s_2 ... s_n");
    return h;
}

std::optional<std::vector<ExactInt>> detect_product_form(const WeightSeries& f, std::size_t n) {
    std::vector<ExactInt> c = f.series.coeffs();
    if (c[0] != 1) throw DomainError("weight series must start with constant term 1");
    std::vector<ExactInt> exponents;
    std::size_t from = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t e = from;
        while (e < c.size() && c[e] == 0) ++e;
        if (e == c.size()) return std::nullopt;
        if (c[e] < 0) return std::nullopt;
        times_one_minus_q_pow(c, e);
        exponents.emplace_back(static_cast<unsigned long>(e));
        from = e;
    }
    for (std::size_t i = 1; i < c.size(); ++i) {
        if (c[i] != 0) return std::nullopt;
    }
    return exponents;
}

std::vector<ExactInt> ehrhart_counts(std::span<const ExactInt> s, std::size_t T,
                                     const EnumerationBudget& budget) {
    checked_degree(ExactInt(static_cast<unsigned long>(T)), budget, "Ehrhart horizon");
    ConeWalker walker(to_machine(s), budget);
    const auto hist = walker.last_coordinate_histogram(static_cast<i64>(T));
    std::vector<ExactInt> counts;
    counts.reserve(hist.size());
    ExactInt running = 0;
    for (i64 h : hist) {
        running += static_cast<long>(h);
        counts.push_back(running);
    }
    return counts;
}

HStarVector h_star(std::span<const ExactInt> s, const EnumerationBudget& budget) {
    const std::size_t n = s.size();
    if (n == 0) throw DomainError("h* needs n >= 1");
    const ExactInt& last = s.back();
    const std::size_t T = checked_degree(last * static_cast<unsigned long>(n + 1), budget,
                                         "Ehrhart horizon");

    std::vector<ExactInt> c = ehrhart_counts(s, T, budget);
    for (std::size_t k = 0; k <= n; ++k) times_one_minus_q_pow(c, last.get_ui());

    if (c[T] != 0) throw InvariantViolation("Q(x) reaches degree (n+1) s_n");
    for (const auto& x : c) {
        if (x < 0) throw InvariantViolation("Q(x) has a negative coefficient");
    }
    HStarVector q{DensePoly(std::move(c)), last, n + 1};
    if (q.coeffs.value_at_one() != last * product(s)) {
        throw InvariantViolation("Q(1) != s_n s_1 s_2 ... s_n");
    }
    return q;
}

CrossCheckReport cross_check_gorenstein(std::span<const ExactInt> s,
                                        const EnumerationBudget& budget) {
    if (s.empty()) throw DomainError("cross-check needs n >= 1");
    ExactInt total = 0;
    for (const auto& d : denominator_exponents(s)) total += d;
    checked_degree(total, budget, "numerator degree bound");
    checked_degree(s.back() * static_cast<unsigned long>(s.size() + 1), budget, "Ehrhart horizon");

    GorensteinResult verdict = lecture_hall_gorenstein(s);
    DensePoly h = numerator_H(s, budget);
    HStarVector q = h_star(s, budget);
    const bool gor = verdict.is_gorenstein();
    const bool h_pal = is_palindromic(h);
    const bool q_sym = q.symmetric();
    return CrossCheckReport{std::move(verdict), std::move(h), std::move(q), gor, h_pal, q_sym};
}

}  // namespace lhcone
