#include "lhcone/cli.hpp"

#include "lhcone/enumeration.hpp"
#include "lhcone/errors.hpp"
#include "lhcone/gcd_structure.hpp"
#include "lhcone/gorenstein.hpp"
#include "lhcone/sequences.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <vector>

namespace lhcone::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

struct Options {
    std::string seq;
    std::string l;
    std::string b;
    std::string k;
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t t = 0;
    std::size_t horizon = 0;
    std::string format = "json";
    std::string matrix;
};

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

struct Outcome {
    Json doc;
    std::optional<Table> table;
    int code = kOk;
};

Json strings(const std::vector<ExactInt>& values) {
    Json arr = Json::array();
    for (const auto& v : values) arr.push_back(to_string(v));
    return arr;
}

Json header(const std::string& command) {
    Json doc;
    doc["schema"] = kSchemaVersion;
    doc["command"] = command;
    return doc;
}

Table coefficient_table(const std::vector<ExactInt>& coeffs, const std::string& index_name) {
    Table t{{index_name, "coefficient"}, {}};
    for (std::size_t i = 0; i < coeffs.size(); ++i) t.rows.push_back({std::to_string(i), to_string(coeffs[i])});
    return t;
}

void add_gorenstein(Json& doc, const GorensteinResult& r) {
    doc["gorenstein"] = r.is_gorenstein();
    if (r.is_gorenstein()) {
        doc["point"] = strings(r.point());
    } else {
        doc["fails_at"] = r.failure().index;
        doc["witness"] = to_string(r.failure().witness);
    }
}

class Invocation {
public:
    Invocation(const Options& opts, const std::function<bool(const char*)>& given)
        : opts_(opts), given_(given) {}

    // --seq, or the shorthands --k/--l for kl:k,l and --l/--b for rec:l,b.
    SequenceSpec spec() const {
        if (given_("--seq")) return parse_sequence_spec(opts_.seq);
        if (given_("--k") && given_("--l")) return SequenceSpec{KlSeq{parse_int(opts_.k), parse_int(opts_.l)}};
        if (given_("--l") && given_("--b")) return SequenceSpec{RecurrenceSeq{parse_int(opts_.l), parse_int(opts_.b)}};
        throw DomainError("--seq (or --k with --l, or --l with --b) is required");
    }

    Sequence sequence() const {
        const SequenceSpec spec = this->spec();
        std::optional<std::size_t> n;
        if (given_("--n")) n = opts_.n;
        return realize(spec, n);
    }

    ExactInt integer(const char* flag, const std::string& text) const {
        if (!given_(flag)) throw DomainError(std::string(flag) + " is required");
        return parse_int(text);
    }
    ExactInt ell() const { return integer("--l", opts_.l); }
    ExactInt b() const { return integer("--b", opts_.b); }

    std::optional<std::size_t> count(const char* flag, std::size_t value) const {
        if (!given_(flag)) return std::nullopt;
        return value;
    }

    const Options& opts() const { return opts_; }

private:
    const Options& opts_;
    std::function<bool(const char*)> given_;
};

Outcome cmd_gor(const Invocation& inv) {
    Outcome out{header("gor"), std::nullopt, kOk};
    GorensteinResult r;
    if (!inv.opts().matrix.empty()) {
        std::string text;
        if (inv.opts().matrix == "-") {
            text.assign(std::istreambuf_iterator<char>(std::cin), {});
        } else {
            std::ifstream in(inv.opts().matrix);
            if (!in) throw DomainError("cannot read matrix file '" + inv.opts().matrix + "'");
            text.assign(std::istreambuf_iterator<char>(in), {});
        }
        const RationalMatrix a = parse_matrix(text);
        out.doc["dimension"] = a.size();
        r = simple_cone_gorenstein(a);
    } else {
        const Sequence s = inv.sequence();
        out.doc["sequence"] = strings(s);
        r = lecture_hall_gorenstein(s);
    }
    add_gorenstein(out.doc, r);
    out.code = r.is_gorenstein() ? kOk : kNegativeVerdict;
    return out;
}

Outcome cmd_series(const Invocation& inv) {
    Outcome out{header("series"), std::nullopt, kOk};
    const Sequence s = inv.sequence();
    const std::size_t M = inv.count("--m", inv.opts().m).value_or(20);
    const WeightSeries f = weight_series(s, M, EnumerationBudget::from_environment());
    out.doc["sequence"] = strings(s);
    out.doc["truncation_degree"] = M;
    out.doc["coefficients"] = strings(f.series.coeffs());
    out.table = coefficient_table(f.series.coeffs(), "degree");
    return out;
}

Outcome cmd_numerator(const Invocation& inv) {
    Outcome out{header("numerator"), std::nullopt, kOk};
    const Sequence s = inv.sequence();
    const DensePoly h = numerator_H(s, EnumerationBudget::from_environment());
    out.doc["sequence"] = strings(s);
    out.doc["denominator_exponents"] = strings(denominator_exponents(s));
    out.doc["coefficients"] = strings(h.coeffs());
    out.doc["value_at_one"] = to_string(h.value_at_one());
    out.doc["palindromic"] = is_palindromic(h);
    out.doc["unimodal"] = is_unimodal(h);
    out.table = coefficient_table(h.coeffs(), "degree");
    return out;
}

Outcome cmd_hstar(const Invocation& inv) {
    Outcome out{header("hstar"), std::nullopt, kOk};
    const Sequence s = inv.sequence();
    const HStarVector q = h_star(s, EnumerationBudget::from_environment());
    out.doc["sequence"] = strings(s);
    out.doc["coefficients"] = strings(q.coeffs.coeffs());
    out.doc["denominator_exponent"] = to_string(q.denominator_exponent);
    out.doc["power"] = q.power;
    out.doc["value_at_one"] = to_string(q.coeffs.value_at_one());
    out.doc["symmetric"] = q.symmetric();
    out.doc["unimodal"] = q.unimodal();
    if (const auto T = inv.count("--t", inv.opts().t)) {
        out.doc["ehrhart_counts"] = strings(ehrhart_counts(s, *T, EnumerationBudget::from_environment()));
    }
    out.table = coefficient_table(q.coeffs.coeffs(), "degree");
    return out;
}

Outcome cmd_product(const Invocation& inv) {
    Outcome out{header("product"), std::nullopt, kOk};
    const SequenceSpec spec = inv.spec();
    const Sequence s = inv.sequence();
    std::optional<Sequence> claimed;
    if (const auto* kl = std::get_if<KlSeq>(&spec.kind)) {
        claimed = kl_product_exponents(kl->k, kl->ell, s.size());
    } else if (const auto* e = std::get_if<EllSeq>(&spec.kind)) {
        claimed = kl_product_exponents(e->ell, e->ell, s.size());
    }
    std::optional<std::size_t> M = inv.count("--m", inv.opts().m);
    if (!M) {
        ExactInt total = 0;
        for (const auto& d : claimed ? *claimed : denominator_exponents(s)) total += d;
        M = to_size(2 * total, "default truncation degree");
    }
    const WeightSeries f = weight_series(s, *M, EnumerationBudget::from_environment());
    const auto exponents = detect_product_form(f, s.size());
    out.doc["sequence"] = strings(s);
    out.doc["truncation_degree"] = *M;
    out.doc["product_form"] = exponents.has_value();
    if (exponents) {
        out.doc["exponents"] = strings(*exponents);
        out.table = coefficient_table(*exponents, "i");
    }
    if (claimed) {
        out.doc["claimed_exponents"] = strings(*claimed);
        out.doc["matches_claim"] = exponents && *exponents == *claimed;
    }
    out.code = exponents ? kOk : kNegativeVerdict;
    return out;
}

Outcome cmd_gcd_table(const Invocation& inv) {
    Outcome out{header("gcd-table"), std::nullopt, kOk};
    const std::size_t N = inv.count("--n", inv.opts().n).value_or(24);
    const RatioTable table = ratio_table(inv.ell(), inv.b(), N);
    out.doc["l"] = to_string(table.ell);
    out.doc["b"] = to_string(table.b);
    Json rows = Json::array();
    Table t{{"n", "gcd", "normalizer", "u_n"}, {}};
    for (const auto& row : table.rows) {
        Json r;
        r["n"] = row.n;
        r["gcd"] = to_string(row.gcd);
        r["normalizer"] = to_string(row.normalizer);
        r["u_n"] = to_string(row.u);
        rows.push_back(std::move(r));
        t.rows.push_back({std::to_string(row.n), to_string(row.gcd), to_string(row.normalizer),
                          to_string(row.u)});
    }
    out.doc["rows"] = std::move(rows);
    out.table = std::move(t);
    return out;
}

Outcome cmd_profile(const Invocation& inv) {
    Outcome out{header("profile"), std::nullopt, kOk};
    const ExactInt ell = inv.ell();
    const ExactInt b = inv.b();
    const GcdProfile p = gcd_profile(ell, b);
    out.doc["l"] = to_string(ell);
    out.doc["b"] = to_string(b);
    out.doc["r"] = to_string(p.r);
    out.doc["t"] = to_string(p.t);
    out.doc["sigma"] = to_string(p.sigma);
    out.doc["gamma"] = to_string(p.gamma);
    out.doc["beta"] = to_string(p.beta);
    return out;
}

Outcome cmd_n0(const Invocation& inv) {
    Outcome out{header("n0"), std::nullopt, kOk};
    const ExactInt ell = inv.ell();
    const ExactInt b = inv.b();
    const N0Certificate c = find_n0(ell, b, inv.count("--horizon", inv.opts().horizon));
    out.doc["l"] = to_string(ell);
    out.doc["b"] = to_string(b);
    out.doc["n0"] = c.n0;
    out.doc["first_hit"] = c.first_hit;
    out.doc["window"] = c.window;
    out.doc["bound"] = to_string(c.bound);
    return out;
}

Outcome cmd_classify(const Invocation& inv) {
    Outcome out{header("classify"), std::nullopt, kOk};
    const SequenceSpec spec = inv.spec();
    const Sequence s = inv.sequence();
    out.doc["sequence"] = strings(s);
    out.doc["spec"] = spec.to_text();

    const URecognition rec = recognize_u_generated(s);
    if (const auto* gen = std::get_if<UGeneration>(&rec)) {
        out.doc["consecutive_coprime"] = true;
        out.doc["u_generated"] = true;
        out.doc["u"] = strings(gen->u);
    } else if (const auto* no = std::get_if<NotUGenerated>(&rec)) {
        out.doc["consecutive_coprime"] = true;
        out.doc["u_generated"] = false;
        out.doc["u_fails_at"] = no->index;
        out.doc["u_quotient"] = to_string(no->quotient);
    } else {
        const auto& bad = std::get<CoprimalityViolation>(rec);
        out.doc["consecutive_coprime"] = false;
        out.doc["u_generated"] = nullptr;
        out.doc["coprimality_fails_at"] = bad.index;
    }
    add_gorenstein(out.doc, lecture_hall_gorenstein(s));

    if (const auto* r = std::get_if<RecurrenceSeq>(&spec.kind); r && r->b != 0) {
        Json family;
        const std::size_t horizon = inv.count("--horizon", inv.opts().horizon).value_or(64);
        family["l_sequence"] = r->b == -1 && r->ell >= 2;
        const auto fail = gorenstein_fail_index(r->ell, r->b, horizon);
        family["horizon"] = horizon;
        if (fail) {
            family["first_failure"] = *fail;
        } else {
            family["first_failure"] = nullptr;
        }
        if (r->b != -1) {
            const FailureThresholdVerdict v = failure_threshold_check(r->ell, r->b);
            family["threshold_applicable"] = v.applicable;
            if (v.applicable) {
                family["threshold"] = v.threshold;
                family["threshold_confirmed"] = v.confirmed;
            }
        }
        out.doc["recurrence"] = std::move(family);
    }
    return out;
}

Outcome cmd_crosscheck(const Invocation& inv) {
    Outcome out{header("crosscheck"), std::nullopt, kOk};
    const Sequence s = inv.sequence();
    const CrossCheckReport r = cross_check_gorenstein(s, EnumerationBudget::from_environment());
    out.doc["sequence"] = strings(s);
    out.doc["gorenstein"] = r.cone_gorenstein;
    out.doc["h_palindromic"] = r.numerator_palindromic;
    out.doc["q_palindromic"] = r.h_star_symmetric;
    out.doc["agree"] = r.agree();
    out.code = r.agree() ? kOk : kNegativeVerdict;
    return out;
}

std::string scalar_text(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_array()) {
        std::string joined;
        for (const auto& x : v) {
            if (!joined.empty()) joined += ' ';
            joined += scalar_text(x);
        }
        return joined;
    }
    return v.dump();
}

void emit(const Outcome& o, const std::string& format, std::ostream& out) {
    if (format == "json") {
        out << o.doc.dump(2) << '\n';
        return;
    }
    if (format == "csv") {
        if (o.table) {
            for (std::size_t i = 0; i < o.table->columns.size(); ++i) {
                out << (i ? "," : "") << o.table->columns[i];
            }
            out << '\n';
            for (const auto& row : o.table->rows) {
                for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
                out << '\n';
            }
            return;
        }
        out << "key,value\n";
        for (const auto& [key, value] : o.doc.items()) {
            if (value.is_object()) {
                for (const auto& [k2, v2] : value.items()) out << key << '.' << k2 << ',' << scalar_text(v2) << '\n';
            } else {
                out << key << ',' << scalar_text(value) << '\n';
            }
        }
        return;
    }
    for (const auto& [key, value] : o.doc.items()) {
        if (key == "rows") continue;
        if (value.is_object()) {
            for (const auto& [k2, v2] : value.items()) out << key << '.' << k2 << ": " << scalar_text(v2) << '\n';
        } else {
            out << key << ": " << scalar_text(value) << '\n';
        }
    }
    if (o.table && o.doc.contains("rows")) {
        for (const auto& row : o.table->rows) {
            for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "\t" : "") << row[i];
            out << '\n';
        }
    }
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Gorenstein s-lecture hall cones, h*-vectors and recurrence gcd structure", "lhcone"};
    app.require_subcommand(1);
    Options opts;

    struct Command {
        const char* name;
        const char* help;
        Outcome (*fn)(const Invocation&);
        bool seq;
    };
    const std::vector<Command> commands{
        {"gor", "Gorenstein test and point (sequence or --matrix)", cmd_gor, true},
        {"series", "weight generating function through degree --m", cmd_series, true},
        {"numerator", "numerator H(q) of the weight generating function", cmd_numerator, true},
        {"hstar", "h*-vector of the rational lecture hall polytope", cmd_hstar, true},
        {"product", "detect a product form prod 1/(1-q^e)", cmd_product, true},
        {"gcd-table", "gcd(s_{n+1},s_n) ratio table", cmd_gcd_table, false},
        {"profile", "invariants r, t, sigma, gamma, beta", cmd_profile, false},
        {"n0", "certified growth threshold n0", cmd_n0, false},
        {"classify", "u-generation, Gorenstein and recurrence verdicts", cmd_classify, true},
        {"crosscheck", "recursion vs H(q) vs h* agreement", cmd_crosscheck, true},
    };

    std::vector<CLI::App*> subs;
    for (const auto& c : commands) {
        CLI::App* sub = app.add_subcommand(c.name, c.help);
        if (c.seq) {
            sub->add_option("--seq", opts.seq, "sequence spec (rec:l,b kl:k,l ell:l u:u1,...;s1 onemodk:k list:...)");
        }
        sub->add_option("--l", opts.l, "recurrence coefficient l");
        sub->add_option("--b", opts.b, "recurrence coefficient b");
        if (c.seq) sub->add_option("--k", opts.k, "(k,l)-sequence parameter k");
        sub->add_option("--n", opts.n, "length / number of rows");
        sub->add_option("--m", opts.m, "truncation degree");
        if (std::string(c.name) == "hstar") sub->add_option("--t", opts.t, "also report Ehrhart counts for t = 0..T");
        sub->add_option("--horizon", opts.horizon, "search window / horizon");
        sub->add_option("--format", opts.format, "output format")
            ->check(CLI::IsMember({"json", "csv", "text"}));
        if (std::string(c.name) == "gor") {
            sub->add_option("--matrix", opts.matrix, "matrix file ('-' for stdin), one row per line");
        }
        subs.push_back(sub);
    }

    std::vector<std::string> storage{"lhcone"};
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : storage) argv.push_back(a.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "lhcone: " << e.what() << '\n';
        return kUsageError;
    }

    for (std::size_t i = 0; i < commands.size(); ++i) {
        if (!subs[i]->parsed()) continue;
        CLI::App* sub = subs[i];
        const Invocation inv(opts, [sub](const char* flag) { return sub->count(flag) > 0; });
        try {
            const Outcome o = commands[i].fn(inv);
            emit(o, opts.format, out);
            return o.code;
        } catch (const ParseError& e) {
            err << "lhcone: parse error: " << e.what() << '\n';
            return kUsageError;
        } catch (const NonPositiveTerm& e) {
            err << "lhcone: " << e.what() << '\n';
            return kUsageError;
        } catch (const DomainError& e) {
            err << "lhcone: " << e.what() << '\n';
            return kUsageError;
        } catch (const SingularMatrix& e) {
            err << "lhcone: " << e.what() << '\n';
            return kUsageError;
        } catch (const std::exception& e) {
            err << "lhcone: " << e.what() << '\n';
            return kRuntimeError;
        }
    }
    err << "lhcone: no subcommand given\n";
    return kUsageError;
}

}  // namespace lhcone::cli
