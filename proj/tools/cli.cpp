#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "padisc/catalog.hpp"
#include "padisc/discrepancy.hpp"
#include "padisc/error.hpp"
#include "padisc/padic.hpp"
#include "padisc/paircorr.hpp"
#include "padisc/permcheck.hpp"
#include "padisc/polynomial.hpp"
#include "padisc/sequence.hpp"

namespace padisc::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr std::size_t max_terms = 5'000'000;
constexpr std::size_t max_schedule = 1'000'000;

enum class Format { json, csv };

// One invocation's result. CSV prints the columns and rows; JSON prints meta
// and, unless rows_in_json is off, the rows as objects keyed by column.
struct Report {
    std::string command;
    json meta = json::object();
    std::vector<std::string> columns;
    std::vector<std::vector<json>> rows;
    bool rows_in_json = true;
    int exit_code = exit_ok;
};

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + "\"";
}

std::string csv_cell(const json& v) {
    if (v.is_null()) return "";
    if (v.is_string()) return csv_quote(v.get<std::string>());
    if (v.is_array()) {
        std::string joined;
        for (const auto& item : v) {
            if (!joined.empty()) joined += ' ';
            joined += item.is_string() ? item.get<std::string>() : item.dump();
        }
        return csv_quote(joined);
    }
    return v.dump();
}

void emit(const Report& report, Format format, std::ostream& out) {
    if (format == Format::csv) {
        for (std::size_t i = 0; i < report.columns.size(); ++i) out << (i ? "," : "") << report.columns[i];
        out << '\n';
        for (const auto& row : report.rows) {
            for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_cell(row[i]);
            out << '\n';
        }
        return;
    }
    json doc;
    doc["schema_version"] = 1;
    doc["command"] = report.command;
    for (const auto& [key, value] : report.meta.items()) doc[key] = value;
    if (report.rows_in_json) {
        json rows = json::array();
        for (const auto& row : report.rows) {
            json obj = json::object();
            for (std::size_t i = 0; i < row.size(); ++i) obj[report.columns[i]] = row[i];
            rows.push_back(std::move(obj));
        }
        doc["rows"] = std::move(rows);
    }
    out << doc.dump(2) << '\n';
}

std::uint64_t parse_count(std::string_view text, std::string_view what) {
    std::uint64_t value = 0;
    const auto* first = text.data();
    const auto* last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (text.empty() || ec != std::errc{} || ptr != last) {
        throw ParseError("invalid " + std::string(what) + " '" + std::string(text) + "'",
                         static_cast<std::size_t>(ptr - first));
    }
    return value;
}

std::string frac(const Rational& q) { return fraction_string(q); }

json approx(const Rational& q) { return to_double(q); }

json roots_json(const std::vector<std::uint64_t>& roots) {
    json a = json::array();
    for (auto r : roots) a.push_back(r);
    return a;
}

// Sequence selection shared by generate, discrepancy, paircorr and bridge.
struct SequenceArgs {
    std::string polynomial;
    std::vector<std::string> linear;
    std::optional<std::size_t> precision;
};

void add_sequence_options(CLI::App* sub, SequenceArgs& args) {
    sub->add_option("polynomial", args.polynomial, "Polynomial f, x_n = f(n), e.g. \"x^3+x\" or \"[1,0,1,0]\" (prefix a space or use -- for a leading minus)");
    sub->add_option("--linear", args.linear, "x_n = n a + b instead of a polynomial")->expected(2)->allow_extra_args(
        false);
    sub->add_option("--K", args.precision, "Work with terms known mod p^K")->check(CLI::Range(1, 4096));
}

// Terms x_1..x_N, exact or truncated to p^K.
struct Terms {
    std::uint32_t p = 3;
    std::string description;
    std::optional<std::size_t> precision;
    std::vector<BigInt> exact;
    std::vector<PAdicApprox> truncated;

    bool is_truncated() const { return precision.has_value(); }
};

Terms load_terms(const SequenceArgs& args, std::uint32_t p, std::size_t count) {
    require_prime(p);
    if (count > max_terms) {
        throw DomainError("N = " + std::to_string(count) + " exceeds the limit of " + std::to_string(max_terms));
    }
    const bool has_poly = !args.polynomial.empty();
    const bool has_linear = !args.linear.empty();
    if (has_poly == has_linear) {
        throw DomainError("give exactly one of a polynomial or --linear a b");
    }
    Terms t;
    t.p = p;
    t.precision = args.precision;
    if (has_linear) {
        const BigInt a = parse_bigint(args.linear[0]);
        const BigInt b = parse_bigint(args.linear[1]);
        t.description = "linear a=" + to_string(a) + " b=" + to_string(b);
        if (t.precision) {
            t.truncated = linear_sequence(digits_of(a, p, *t.precision), digits_of(b, p, *t.precision), count);
        } else {
            t.exact = poly_sequence(IntPolynomial(std::vector<BigInt>{b, a}), count);
        }
        return t;
    }
    const IntPolynomial f = parse_poly(args.polynomial);
    t.description = render(f);
    t.exact = poly_sequence(f, count);
    if (t.precision) {
        t.truncated.reserve(count);
        for (const auto& x : t.exact) t.truncated.push_back(digits_of(x, p, *t.precision));
        t.exact.clear();
    }
    return t;
}

// Digit expansions of the exact terms, long enough to represent each one.
std::vector<PAdicApprox> expand_exact(const Terms& t) {
    BigInt largest = 0;
    for (const auto& x : t.exact) {
        if (sgn(x) < 0) throw DomainError("negative terms have no finite digit expansion; pass --K");
        largest = std::max(largest, x);
    }
    std::size_t width = 1;
    while (ipow(t.p, width) <= largest) ++width;
    std::vector<PAdicApprox> out;
    out.reserve(t.exact.size());
    for (const auto& x : t.exact) out.push_back(digits_of(x, t.p, width));
    return out;
}

DiscrepancyResult discrepancy_prefix(const Terms& t, std::size_t n) {
    if (t.is_truncated()) return padic_discrepancy_truncated(std::span(t.truncated).first(n));
    return padic_discrepancy(std::span(t.exact).first(n), t.p);
}

std::string certificate(const Verdict& v, std::uint32_t p) {
    std::vector<std::string> parts;
    if (v.missing_residue) {
        parts.push_back("misses " + std::to_string(v.missing_residue->residue) + " mod " +
                        to_string(ipow(p, v.missing_residue->level)));
    }
    if (v.collision) {
        parts.push_back("f(" + std::to_string(v.collision->first) + ") = f(" + std::to_string(v.collision->second) +
                        ") mod " + to_string(ipow(p, v.collision->level)));
    }
    if (v.derivative_root) {
        parts.push_back("f'(" + std::to_string(*v.derivative_root) + ") = 0 mod " + std::to_string(p));
    }
    std::string joined;
    for (const auto& s : parts) joined += (joined.empty() ? "" : "; ") + s;
    return joined;
}

json verdict_json(const Verdict& v, std::uint32_t p) {
    json j;
    j["method"] = std::string(to_string(v.method));
    j["low_discrepancy"] = v.low_discrepancy;
    j["perm_mod_p"] = v.perm_mod_p;
    j["perm_mod_p2"] = v.perm_mod_p2;
    j["derivative_root"] = v.derivative_root ? json(*v.derivative_root) : json(nullptr);
    j["missing_residue"] =
        v.missing_residue ? json{{"level", v.missing_residue->level}, {"residue", v.missing_residue->residue}}
                          : json(nullptr);
    j["collision"] = v.collision ? json{{"level", v.collision->level},
                                        {"first", v.collision->first},
                                        {"second", v.collision->second}}
                                 : json(nullptr);
    j["certificate"] = certificate(v, p);
    return j;
}

// --- subcommands -----------------------------------------------------------

Report cmd_classify(std::uint32_t p, const std::string& text) {
    require_prime(p);
    const IntPolynomial f = parse_poly(text);
    const Verdict truth = classify_low_discrepancy(f, p);
    const Verdict cert = noebauer_mod_p2(f, p);

    Report r;
    r.command = "classify";
    r.rows_in_json = false;
    r.meta["p"] = p;
    r.meta["polynomial"] = render(f);
    r.meta["brute_force"] = verdict_json(truth, p);
    r.meta["noebauer"] = verdict_json(cert, p);

    json assoc = nullptr;
    std::optional<bool> formula;
    if (p >= 3) {
        const Verdict v = classify_via_associated(f, p);
        formula = v.low_discrepancy;
        assoc = verdict_json(v, p);
        assoc["g1"] = render(associated_g1(f, p));
        assoc["g2"] = render(associated_g2(f, p));
    }
    r.meta["associated"] = assoc;
    const bool divergence = formula && *formula != truth.low_discrepancy;
    r.meta["divergence"] = divergence;
    r.meta["low_discrepancy"] = truth.low_discrepancy;

    r.columns = {"p", "polynomial", "low_discrepancy", "perm_mod_p", "perm_mod_p2", "noebauer", "g1", "g2",
                 "paper_formula", "divergence", "certificate"};
    r.rows.push_back({p, render(f), truth.low_discrepancy, truth.perm_mod_p, truth.perm_mod_p2,
                      cert.low_discrepancy, p >= 3 ? assoc["g1"] : json(nullptr),
                      p >= 3 ? assoc["g2"] : json(nullptr), formula ? json(*formula) : json(nullptr), divergence,
                      certificate(truth, p)});
    return r;
}

Report cmd_generate(std::uint32_t p, const SequenceArgs& args, std::size_t n, const std::string& mode) {
    if (n == 0) throw DomainError("--n must be at least 1");
    Terms t = load_terms(args, p, n);
    Report r;
    r.command = "generate";
    r.meta["p"] = p;
    r.meta["sequence"] = t.description;
    r.meta["mode"] = mode;
    if (mode == "integers") {
        r.columns = {"n", "value"};
        for (std::size_t i = 0; i < n; ++i) {
            r.rows.push_back({i + 1, to_string(t.is_truncated() ? t.truncated[i].residue() : t.exact[i])});
        }
        return r;
    }
    const std::vector<PAdicApprox> digits = t.is_truncated() ? t.truncated : expand_exact(t);
    const std::size_t width = digits.front().precision();
    r.meta["K"] = width;
    if (mode == "digits") {
        r.columns = {"n"};
        for (std::size_t i = 0; i < width; ++i) r.columns.push_back("d" + std::to_string(i));
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<json> row{i + 1};
            for (auto d : digits[i].digits()) row.emplace_back(d);
            r.rows.push_back(std::move(row));
        }
    } else {
        r.columns = {"n", "monna", "monna_approx"};
        for (std::size_t i = 0; i < n; ++i) {
            const Rational y = monna_map(digits[i]);
            r.rows.push_back({i + 1, frac(y), approx(y)});
        }
    }
    return r;
}

Report cmd_discrepancy(std::uint32_t p, const SequenceArgs& args, const std::vector<std::size_t>& schedule) {
    const Terms t = load_terms(args, p, *std::max_element(schedule.begin(), schedule.end()));
    Report r;
    r.command = "discrepancy";
    r.meta["p"] = p;
    r.meta["sequence"] = t.description;
    r.columns = {"N", "D_N", "N_times_D_N", "D_N_approx", "witness", "level", "residue", "separation_depth"};
    for (const std::size_t n : schedule) {
        const DiscrepancyResult d = discrepancy_prefix(t, n);
        const Rational scaled = d.value * static_cast<unsigned long>(n);
        r.rows.push_back({n, frac(d.value), frac(scaled), approx(d.value), d.is_tail() ? "tail" : "ball",
                          d.witness_level ? json(*d.witness_level) : json(nullptr),
                          d.witness_residue ? json(to_string(*d.witness_residue)) : json(nullptr),
                          d.separation_depth});
    }
    return r;
}

Report cmd_paircorr(std::uint32_t p, const SequenceArgs& args, const std::string& alpha_text,
                    const std::vector<std::string>& s_texts, const std::vector<std::size_t>& schedule) {
    const Rational alpha = parse_rational(alpha_text);
    std::vector<Rational> s_list;
    for (const auto& s : s_texts) s_list.push_back(parse_rational(s));
    if (s_list.empty()) throw DomainError("--s needs at least one value");
    const Terms t = load_terms(args, p, *std::max_element(schedule.begin(), schedule.end()));

    Report r;
    r.command = "paircorr";
    r.meta["p"] = p;
    r.meta["sequence"] = t.description;
    r.meta["alpha"] = frac(alpha);
    r.columns = {"N", "s", "level", "pairs", "F", "F_approx"};
    for (const std::size_t n : schedule) {
        for (const auto& s : s_list) {
            const unsigned long k = threshold_level(s, n, alpha, p);
            const BigInt pairs = t.is_truncated() ? pair_count(std::span(t.truncated).first(n), k)
                                                  : pair_count(std::span(t.exact).first(n), p, k);
            const BigInt big_n(static_cast<unsigned long>(n));
            const Rational value = make_rational(ipow(p, k) * pairs, big_n * big_n);
            r.rows.push_back({n, frac(s), k, to_string(pairs), frac(value), approx(value)});
        }
    }
    return r;
}

Report cmd_bridge(std::uint32_t p, const SequenceArgs& args, const std::vector<std::size_t>& schedule) {
    const Terms t = load_terms(args, p, *std::max_element(schedule.begin(), schedule.end()));
    const std::vector<PAdicApprox> digits = t.is_truncated() ? t.truncated : expand_exact(t);
    std::vector<Rational> images;
    images.reserve(digits.size());
    for (const auto& x : digits) images.push_back(monna_map(x));

    Report r;
    r.command = "bridge";
    r.meta["p"] = p;
    r.meta["sequence"] = t.description;
    r.meta["K"] = digits.front().precision();
    r.columns = {"N", "delta", "d", "upper_bound", "delta_approx", "d_approx", "lower_holds", "upper", "holds",
                 "N_d_over_lnN"};
    for (const std::size_t n : schedule) {
        const Rational delta = discrepancy_prefix(t, n).value;
        const Rational d = real_extreme_discrepancy(std::span(images).first(n));
        const MeijerCheck check = meijer_bound_check(delta, d, p);
        const json growth = n >= 2 ? json(static_cast<double>(n) * to_double(d) / std::log(static_cast<double>(n)))
                                   : json(nullptr);
        r.rows.push_back({n, frac(delta), frac(d), check.upper_bound, approx(delta), approx(d), check.lower_holds,
                          std::string(to_string(check.upper)), check.holds(), growth});
    }
    return r;
}

json entry_json(const DicksonEntry& e) {
    json terms = json::array();
    for (const auto& term : e.terms) {
        terms.push_back({{"coefficient", frac(make_rational(static_cast<long>(term.numerator),
                                                           static_cast<long>(term.denominator)))},
                         {"parameter_power", term.parameter_power},
                         {"degree", term.degree}});
    }
    return {{"label", e.label},
            {"row", e.row},
            {"table", std::string(to_string(e.table))},
            {"primes", e.primes.describe()},
            {"parameter", std::string(to_string(e.predicate))},
            {"signs", std::string(to_string(e.reading))},
            {"terms", terms},
            {"derivative", e.derivative_label.empty() ? json(nullptr) : json(e.derivative_label)},
            {"roots", std::string(to_string(e.roots))},
            {"expected_roots", roots_json(e.expected_roots)}};
}

Report cmd_dump_tables() {
    Report r;
    r.command = "verify-tables";
    r.rows_in_json = false;
    json entries = json::array();
    for (const auto& e : dickson_entries()) entries.push_back(entry_json(e));
    r.meta["entries"] = std::move(entries);
    return r;
}

Report cmd_verify_tables(const std::string& which, std::optional<std::uint32_t> p_filter) {
    if (p_filter) require_prime(*p_filter);
    Report r;
    r.command = "verify-tables";
    r.meta["which"] = which;
    r.meta["p"] = p_filter ? json(*p_filter) : json(nullptr);
    r.columns = {"table",      "row",  "label",      "p",    "signs",          "a",
                 "instance",   "permutation",        "low_discrepancy",     "derivative",
                 "derivative_roots", "expected_roots", "status", "failures"};
    std::size_t checked = 0;
    std::size_t failed = 0;
    std::size_t reported = 0;
    for (const auto& e : dickson_entries()) {
        const bool selected = which == "dickson"       ? e.table == TableId::dickson
                              : which == "lds"         ? e.table == TableId::low_discrepancy
                                                       : e.table == TableId::dickson && e.roots != RootExpectation::not_listed;
        if (!selected) continue;
        std::vector<std::uint32_t> primes = verification_primes(e);
        if (p_filter) {
            if (!e.primes.admits(*p_filter)) continue;
            primes = {*p_filter};
        }
        for (const auto p : primes) {
            const EntryReport report = verify_entry(e, p);
            for (const auto& c : report.checks) {
                ++checked;
                std::string status = "ok";
                if (!c.failures.empty()) {
                    status = e.reading == SignReading::independent ? "independent_fail" : "fail";
                    ++(e.reading == SignReading::independent ? reported : failed);
                }
                std::string failures;
                for (const auto& f : c.failures) failures += (failures.empty() ? "" : "; ") + f;
                r.rows.push_back({std::string(to_string(e.table)), e.row, e.label, p, std::string(to_string(e.reading)),
                                  c.parameter ? json(*c.parameter) : json(nullptr), render(c.instance), c.permutation,
                                  c.low_discrepancy ? json(*c.low_discrepancy) : json(nullptr),
                                  e.derivative_label.empty() ? json(nullptr) : json(e.derivative_label),
                                  roots_json(c.derivative_roots),
                                  e.roots == RootExpectation::exact  ? roots_json(e.expected_roots)
                                  : e.roots == RootExpectation::none ? json("none")
                                  : e.roots == RootExpectation::exists_for_each_parameter ? json("exists")
                                                                                          : json(nullptr),
                                  status, failures});
            }
            if (!report.failures.empty() && report.checks.empty()) {
                ++failed;
                r.rows.push_back({std::string(to_string(e.table)), e.row, e.label, p, std::string(to_string(e.reading)),
                                  nullptr, nullptr, nullptr, nullptr, nullptr, nullptr, nullptr, "fail",
                                  report.failures.front()});
            }
        }
    }
    r.meta["checked"] = checked;
    r.meta["failed"] = failed;
    r.meta["failed_independent_readings"] = reported;
    r.exit_code = failed > 0 ? exit_verification : exit_ok;
    return r;
}

Report cmd_search(std::uint32_t p, unsigned degree, const SearchConstraints& constraints, unsigned workers) {
    require_prime(p);
    if (degree == 0) throw DomainError("--degree must be at least 1");
    SearchOptions options;
    options.workers = workers;
    const auto found = exhaustive_search(p, degree, constraints, options);
    const TableMatch match = match_against_table(found, p, degree);

    Report r;
    r.command = "search";
    r.meta["p"] = p;
    r.meta["max_degree"] = degree;
    r.meta["constraints"] = {{"monic", constraints.monic},
                             {"zero_constant", constraints.zero_constant},
                             {"nonzero_linear", constraints.nonzero_linear}};
    r.meta["candidates"] = search_space_size(p, degree, constraints);
    r.meta["found"] = found.size();
    json counts = json::object();
    for (auto kind : {Explanation::linear, Explanation::low_discrepancy_table, Explanation::power_linear_family,
                      Explanation::affine_equivalent, Explanation::unexplained}) {
        counts[std::string(to_string(kind))] = match.count(kind);
    }
    r.meta["explained"] = counts;
    r.meta["missing_references"] = match.unmatched_references.size();
    r.meta["clean"] = match.clean();

    r.columns = {"status", "degree", "polynomial", "explanation", "source"};
    for (const auto& e : match.entries) {
        r.rows.push_back({"found", e.polynomial.degree(), render(e.polynomial), std::string(to_string(e.kind)),
                          e.source});
    }
    for (const auto& e : match.unmatched_references) {
        r.rows.push_back({"missing", e.polynomial.degree(), render(e.polynomial), std::string(to_string(e.kind)),
                          e.source});
    }
    r.exit_code = match.clean() ? exit_ok : exit_verification;
    return r;
}

Report cmd_scan(std::uint32_t p, unsigned degree, long long cmin, std::optional<long long> cmax, unsigned workers) {
    require_prime(p);
    DivergenceScanOptions options;
    options.p = p;
    options.max_degree = degree;
    options.coefficient_begin = cmin;
    options.coefficient_end = cmax.value_or(cmin + p);
    options.workers = workers;
    const auto entries = divergence_scan(options);

    Report r;
    r.command = "scan";
    r.meta["p"] = p;
    r.meta["max_degree"] = degree;
    r.meta["coefficients"] = {options.coefficient_begin, options.coefficient_end};
    r.meta["divergences"] = entries.size();
    r.columns = {"polynomial", "g1", "g2", "ground_truth", "paper_formula", "perm_mod_p", "perm_mod_p2",
                 "certificate"};
    for (const auto& e : entries) {
        r.rows.push_back({render(e.polynomial), render(e.g1), render(e.g2), e.ground_truth.low_discrepancy,
                          e.associated.low_discrepancy, e.ground_truth.perm_mod_p, e.ground_truth.perm_mod_p2,
                          certificate(e.ground_truth, p)});
    }
    return r;
}

}  // namespace

std::vector<std::size_t> parse_schedule(std::string_view text, std::uint32_t p) {
    std::vector<std::size_t> out;
    auto push = [&](std::uint64_t n) {
        if (n == 0) throw ParseError("schedule values must be at least 1", 0);
        if (out.size() >= max_schedule) throw ParseError("schedule longer than " + std::to_string(max_schedule), 0);
        out.push_back(static_cast<std::size_t>(n));
    };
    auto split_range = [](std::string_view item) -> std::optional<std::pair<std::string_view, std::string_view>> {
        const auto dots = item.find("..");
        if (dots == std::string_view::npos) return std::nullopt;
        return std::pair{item.substr(0, dots), item.substr(dots + 2)};
    };
    if (text.empty()) throw ParseError("empty N schedule", 0);

    if (text.starts_with("pk:")) {
        const auto range = split_range(text.substr(3));
        if (!range) throw ParseError("expected pk:k1..k2", 3);
        const auto k1 = parse_count(range->first, "exponent");
        const auto k2 = parse_count(range->second, "exponent");
        if (k1 > k2) throw ParseError("empty exponent range", 3);
        for (auto k = k1; k <= k2; ++k) {
            const BigInt n = ipow(p, static_cast<unsigned long>(k));
            if (!fits_u64(n) || n > max_terms) throw ParseError("p^" + std::to_string(k) + " is too large", 3);
            push(to_u64(n));
        }
        return out;
    }

    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        const auto item = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        if (const auto range = split_range(item)) {
            const auto a = parse_count(range->first, "N");
            const auto b = parse_count(range->second, "N");
            if (a > b) throw ParseError("empty range '" + std::string(item) + "'", start);
            if (b - a >= max_schedule) throw ParseError("schedule longer than " + std::to_string(max_schedule), start);
            for (auto n = a; n <= b; ++n) push(n);
        } else {
            push(parse_count(item, "N"));
        }
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Polynomial sequences in the p-adic integers: classification, discrepancy, pair correlations",
                 "padisc"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format_text;
    std::string out_path;
    unsigned workers = 1;
    app.add_option("--format", format_text, "Output format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--out", out_path, "Write output to PATH instead of standard output");
    app.add_option("--workers", workers, "Worker threads for search and scan")->check(CLI::Range(1u, 256u));

    std::uint32_t p = 0;
    std::optional<std::uint32_t> p_filter;
    std::string poly_text;
    SequenceArgs seq;
    std::size_t n_terms = 0;
    std::string mode = "digits";
    std::string schedule_text;
    std::string alpha_text = "1/1";
    std::vector<std::string> s_texts;
    std::string which = "dickson";
    bool dump = false;
    unsigned degree = 0;
    bool no_monic = false;
    bool with_constant = false;
    bool nonzero_linear = false;
    long long cmin = 0;
    std::optional<long long> cmax;

    const char* schedule_help = "N schedule: a..b, a,b,c or pk:k1..k2 (powers of p)";

    auto* classify = app.add_subcommand("classify", "Low-discrepancy verdicts for f over Z_p");
    classify->add_option("--p", p, "Prime")->required();
    classify->add_option("polynomial", poly_text, "Polynomial, e.g. \"x^3+x\"")->required();
    classify->footer("CSV columns: p,polynomial,low_discrepancy,perm_mod_p,perm_mod_p2,noebauer,g1,g2,paper_formula,"
                     "divergence,certificate");

    auto* generate = app.add_subcommand("generate", "First N terms of a sequence");
    generate->add_option("--p", p, "Prime")->required();
    add_sequence_options(generate, seq);
    generate->add_option("--n", n_terms, "Number of terms")->required();
    generate->add_option("--mode", mode, "digits (little-endian), monna or integers")
        ->check(CLI::IsMember({"digits", "monna", "integers"}));
    generate->footer("CSV columns: n,d0..d{K-1} (digits) | n,monna,monna_approx | n,value");

    auto* discrepancy = app.add_subcommand("discrepancy", "Exact p-adic discrepancy D_N");
    discrepancy->add_option("--p", p, "Prime")->required();
    add_sequence_options(discrepancy, seq);
    discrepancy->add_option("--N", schedule_text, schedule_help)->required();
    discrepancy->footer("CSV columns: N,D_N,N_times_D_N,D_N_approx,witness,level,residue,separation_depth\n"
                        "witness is ball (level, residue) or tail; *_approx columns are decimal approximations");

    auto* paircorr = app.add_subcommand("paircorr", "Pair-correlation statistic F_{N,alpha,p}(s)");
    paircorr->add_option("--p", p, "Prime")->required();
    add_sequence_options(paircorr, seq);
    paircorr->add_option("--alpha", alpha_text, "Exponent u/v in (0, 1]");
    paircorr->add_option("--s", s_texts, "Radii s > 0 as u/v")->required()->delimiter(',');
    paircorr->add_option("--N", schedule_text, schedule_help)->required();
    paircorr->footer("CSV columns: N,s,level,pairs,F,F_approx (F_approx is a decimal approximation)");

    auto* verify = app.add_subcommand("verify-tables", "Check the tabulated permutation polynomials");
    verify->add_option("--which", which, "dickson, derivatives or lds")
        ->check(CLI::IsMember({"dickson", "derivatives", "lds"}));
    verify->add_option("--p", p_filter, "Only entries admitting this prime, checked at it");
    verify->add_flag("--dump", dump, "Print the encoded tables as JSON and exit");
    verify->footer("CSV columns: table,row,label,p,signs,a,instance,permutation,low_discrepancy,derivative,"
                   "derivative_roots,expected_roots,status,failures\nExit status 2 when a row fails");

    auto* search = app.add_subcommand("search", "Exhaustive search for low-discrepancy polynomials");
    search->add_option("--p", p, "Prime")->required();
    search->add_option("--degree", degree, "Maximal degree")->required();
    search->add_flag("--no-monic", no_monic, "Allow any unit leading coefficient");
    search->add_flag("--with-constant", with_constant, "Let the constant term vary");
    search->add_flag("--nonzero-linear", nonzero_linear, "Require a nonzero linear coefficient");
    search->footer("CSV columns: status,degree,polynomial,explanation,source\n"
                   "status is found or missing (a known family member absent from the search)\n"
                   "Exit status 2 when anything is unexplained or missing");

    auto* scan = app.add_subcommand("scan", "Polynomials where the associated-polynomial verdict is wrong");
    scan->add_option("--p", p, "Odd prime")->required();
    scan->add_option("--degree", degree, "Maximal degree")->required();
    scan->add_option("--cmin", cmin, "Smallest coefficient (inclusive)");
    scan->add_option("--cmax", cmax, "Coefficient bound (exclusive, default cmin + p)");
    scan->footer("CSV columns: polynomial,g1,g2,ground_truth,paper_formula,perm_mod_p,perm_mod_p2,certificate");

    auto* bridge = app.add_subcommand("bridge", "p-adic versus real discrepancy through the Monna map");
    bridge->add_option("--p", p, "Prime")->required();
    add_sequence_options(bridge, seq);
    bridge->add_option("--N", schedule_text, schedule_help)->required();
    bridge->footer("CSV columns: N,delta,d,upper_bound,delta_approx,d_approx,lower_holds,upper,holds,N_d_over_lnN\n"
                   "upper_bound and the *_approx columns are floating point");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        Report report;
        auto schedule = [&] { return parse_schedule(schedule_text, p); };
        if (classify->parsed()) {
            report = cmd_classify(p, poly_text);
        } else if (generate->parsed()) {
            report = cmd_generate(p, seq, n_terms, mode);
        } else if (discrepancy->parsed()) {
            require_prime(p);
            report = cmd_discrepancy(p, seq, schedule());
        } else if (paircorr->parsed()) {
            require_prime(p);
            report = cmd_paircorr(p, seq, alpha_text, s_texts, schedule());
        } else if (verify->parsed()) {
            report = dump ? cmd_dump_tables() : cmd_verify_tables(which, p_filter);
        } else if (search->parsed()) {
            report = cmd_search(p, degree, SearchConstraints{!no_monic, !with_constant, nonzero_linear}, workers);
        } else if (scan->parsed()) {
            report = cmd_scan(p, degree, cmin, cmax, workers);
        } else {
            require_prime(p);
            report = cmd_bridge(p, seq, schedule());
        }

        Format format = (classify->parsed() || dump) ? Format::json : Format::csv;
        if (!format_text.empty()) format = format_text == "json" ? Format::json : Format::csv;
        if (dump) format = Format::json;

        if (out_path.empty()) {
            emit(report, format, out);
        } else {
            std::ofstream file(out_path);
            if (!file) {
                err << "error: cannot open " << out_path << '\n';
                return exit_usage;
            }
            emit(report, format, file);
        }
        return report.exit_code;
    } catch (const InternalError& e) {
        err << "internal check failed: " << e.what() << '\n';
        return exit_verification;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
}

}  // namespace padisc::cli
