#pragma once

/*
 * Command implementations behind the `lefdet` executable.
 *
 * Each command takes a RunConfig and returns the rendered document plus an
 * exit code: 0 success / everything matched, 1 a verified mismatch between
 * the brute-force determinant and a closed form (or a failed identity
 * check), 2 a usage error. Disagreements with the published literal case
 * statements are reported under "paper_literal_audit" and never change the
 * exit code.
 */

#include "lefdet/formulas.hpp"
#include "lefdet/mpoly.hpp"
#include "lefdet/partition.hpp"
#include "lefdet/random.hpp"
#include "lefdet/rational.hpp"
#include "lefdet/ring.hpp"
#include "lefdet/symfunc.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <type_traits>
#include <vector>

namespace lefdet::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "lefdet/1";

enum class Command { det, verify, sweep, slp, schur, duality, report };
enum class OutputFormat { json, csv, text };

struct RunConfig {
    Command command = Command::det;
    int d = 0, q = 0, k = 0;
    std::optional<int> u;
    std::string forms_text;
    std::uint64_t seed = 0;
    int trials = 1;
    OutputFormat output = OutputFormat::json;

    // det
    std::string method = "direct";
    bool symbolic = false;

    // verify / sweep
    bool allow_zero = false;
    int dmax = 4;
    std::optional<int> smax;
    bool has_d = false, has_q = false, has_k = false;
    unsigned threads = 0; // 0: LEFDET_THREADS or hardware concurrency

    // schur / duality
    std::string partition_text;
    std::string values_text;
    int r = 1, m = 1;
    std::string a_text, b_text;
};

struct CommandResult {
    int exit_code = 0;
    std::string output;
};

/// Thrown for malformed flags or values that violate a command's preconditions.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// `2,1;1,3` -> [(2,1), (1,3)]; the empty string is the empty list.
inline FormList<Rational> parse_forms(std::string_view text)
{
    FormList<Rational> out;
    if (lefdet::detail::trim(text).empty()) return out;
    for (auto pair : lefdet::detail::split(text, ';')) {
        auto parts = lefdet::detail::split(pair, ',');
        if (parts.size() != 2) throw UsageError("form must be 'a,b': '" + std::string(pair) + "'");
        try {
            out.emplace_back(parse_rational(parts[0]), parse_rational(parts[1]));
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }
    return out;
}

inline std::string forms_to_string(const FormList<Rational>& forms)
{
    std::string out;
    for (std::size_t i = 0; i < forms.size(); ++i) {
        if (i) out += ';';
        out += to_string(forms[i].a) + ',' + to_string(forms[i].b);
    }
    return out;
}

inline std::string render(const Rational& x, const std::vector<std::string>&) { return to_string(x); }
inline std::string render(const MultiPoly& p, const std::vector<std::string>& names) { return p.to_string(names); }

namespace internal {

inline Json ints(const std::vector<int>& v)
{
    Json out = Json::array();
    for (int x : v) out.push_back(x);
    return out;
}

inline Json header(const char* command)
{
    Json doc;
    doc["schema"] = kSchema;
    doc["command"] = command;
    return doc;
}

template <ExactRing T>
Json expansion_json(const Expansion<T>& ex, const std::vector<std::string>& names)
{
    Json terms = Json::array();
    for (const auto& t : ex.terms) {
        Json j;
        j["delta"] = ints(t.delta);
        j["lambda"] = ints(t.lam);
        j["nu"] = ints(t.nu);
        j["x_minor"] = render(t.x_minor, names);
        j["y_minor"] = render(t.y_minor, names);
        j["value"] = render(t.value, names);
        terms.push_back(std::move(j));
    }
    Json out;
    out["value"] = render(ex.value, names);
    out["rows"] = ex.rows;
    out["terms"] = std::move(terms);
    return out;
}

template <ExactRing T>
Json literal_json(const DiscrepancyReport<T>& rep, const std::vector<std::string>& names)
{
    if (rep.literal_error) return Json{{"error", *rep.literal_error}};
    Json cases = Json::array();
    for (const auto& c : rep.literal)
        cases.push_back(Json{{"case", c.case_id}, {"value", render(c.value, names)}, {"match_direct", c.matches_direct}});
    return cases;
}

inline unsigned worker_count(unsigned requested)
{
    if (requested) return requested;
    if (const char* env = std::getenv("LEFDET_THREADS")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<unsigned>(v);
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? hc : 1;
}

/// Runs task(i) for i in [0, n) on a pool; rethrows the first failure by index.
inline void parallel_for(std::size_t n, unsigned workers, const std::function<void(std::size_t)>& task)
{
    std::vector<std::exception_ptr> errors(n);
    std::atomic<std::size_t> next{0};
    auto run = [&] {
        for (std::size_t i = next++; i < n; i = next++) {
            try {
                task(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 1; w < std::min<std::size_t>(workers, n); ++w) pool.emplace_back(run);
        run();
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

inline void check_cell(const RunConfig& cfg)
{
    if (cfg.q < 1 || cfg.d < cfg.q) throw UsageError("need d >= q >= 1");
    if (cfg.k < 0 || 2 * cfg.k > cfg.d + cfg.q) throw UsageError("need 0 <= k <= (d+q)/2");
}

} // namespace internal

// ---------------------------------------------------------------------------
// det

namespace internal {

template <ExactRing T>
Json det_document(const RunConfig& cfg, const FormList<T>& forms, const std::vector<std::string>& names)
{
    const RingParams rp(cfg.d, cfg.q);
    const int n = rp.socle() - 2 * cfg.k;
    if (static_cast<int>(forms.size()) != n)
        throw UsageError("need d+q-2k = " + std::to_string(n) + " forms, got " + std::to_string(forms.size()));
    const int u = cfg.u.value_or(n);
    if (u < 0 || u > n) throw UsageError("need 0 <= u <= d+q-2k");

    Json doc = header("det");
    doc["d"] = cfg.d;
    doc["q"] = cfg.q;
    doc["k"] = cfg.k;
    doc["method"] = cfg.method;
    doc["symbolic"] = cfg.symbolic;
    if constexpr (std::is_same_v<T, Rational>)
        doc["forms"] = forms_to_string(forms);
    else
        doc["forms"] = "symbolic";

    T direct = det_direct(rp, cfg.k, forms);
    if (cfg.method == "direct") {
        doc["det"] = render(direct, names);
    } else if (cfg.method == "expansion") {
        auto ex = det_schur_expansion(rp, cfg.k, SplitForms<T>::at(forms, static_cast<std::size_t>(u)));
        doc["u"] = u;
        doc["det"] = render(ex.value, names);
        doc["match_direct"] = ex.value == direct;
        doc["expansion"] = expansion_json(ex, names);
    } else if (cfg.method == "corollary") {
        T c = det_corollary(rp, cfg.k, forms);
        doc["det"] = render(c, names);
        doc["match_direct"] = c == direct;
    } else {
        throw UsageError("unknown method '" + cfg.method + "' (direct, expansion, corollary)");
    }
    return doc;
}

} // namespace internal

inline Json cmd_det(const RunConfig& cfg)
{
    internal::check_cell(cfg);
    if (cfg.symbolic) {
        const auto n = static_cast<std::size_t>(cfg.d + cfg.q - 2 * cfg.k);
        return internal::det_document(cfg, symbolic_forms(n), form_variable_names(n));
    }
    return internal::det_document(cfg, parse_forms(cfg.forms_text), {});
}

// ---------------------------------------------------------------------------
// verify / sweep

struct TrialRecord {
    int trial = 0;
    FormList<Rational> forms;
    DiscrepancyReport<Rational> report;
};

struct CellRecord {
    int d, q, k, u;
    std::vector<TrialRecord> trials;
};

struct Cell {
    int d, q, k, u;
};

inline std::vector<Cell> sweep_cells(const RunConfig& cfg)
{
    std::vector<Cell> cells;
    auto add_pair = [&](int d, int q) {
        for (int k = 0; 2 * k <= d + q; ++k) {
            if (cfg.has_k && k != cfg.k) continue;
            const int n = d + q - 2 * k;
            for (int u = 0; u <= n; ++u) {
                if (cfg.u && u != *cfg.u) continue;
                cells.push_back({d, q, k, u});
            }
        }
    };
    if (cfg.has_d || cfg.has_q) {
        if (!(cfg.has_d && cfg.has_q)) throw UsageError("--d and --q go together");
        if (cfg.q < 1 || cfg.d < cfg.q) throw UsageError("need d >= q >= 1");
        if (cfg.has_k && (cfg.k < 0 || 2 * cfg.k > cfg.d + cfg.q)) throw UsageError("need 0 <= k <= (d+q)/2");
        add_pair(cfg.d, cfg.q);
    } else {
        if (cfg.dmax < 1) throw UsageError("need --dmax >= 1");
        for (int d = 1; d <= cfg.dmax; ++d)
            for (int q = 1; q <= d; ++q)
                if (!cfg.smax || d + q <= *cfg.smax) add_pair(d, q);
    }
    if (cells.empty()) throw UsageError("the requested sweep has no cells");
    return cells;
}

inline std::vector<CellRecord> run_sweep(const RunConfig& cfg)
{
    if (cfg.trials < 1) throw UsageError("need --trials >= 1");
    const auto cells = sweep_cells(cfg);
    std::vector<CellRecord> out(cells.size());
    internal::parallel_for(cells.size(), internal::worker_count(cfg.threads), [&](std::size_t i) {
        const Cell c = cells[i];
        const RingParams rp(c.d, c.q);
        CellRecord rec{c.d, c.q, c.k, c.u, {}};
        for (int t = 0; t < cfg.trials; ++t) {
            CellRng rng(cfg.seed, {c.d, c.q, c.k, c.u, t});
            auto forms = rng.forms(static_cast<std::size_t>(c.d + c.q - 2 * c.k), cfg.allow_zero);
            auto sf = SplitForms<Rational>::at(forms, static_cast<std::size_t>(c.u));
            rec.trials.push_back({t, forms, discrepancy_report(rp, c.k, c.u, sf)});
        }
        out[i] = std::move(rec);
    });
    return out;
}

inline bool trial_matches(const DiscrepancyReport<Rational>& r)
{
    return r.expansion_matches && r.corollary_matches.value_or(true);
}

inline CommandResult verify_document(const RunConfig& cfg, const std::vector<CellRecord>& records)
{
    Json doc = internal::header("verify");
    doc["seed"] = cfg.seed;
    doc["trials"] = cfg.trials;
    doc["allow_zero"] = cfg.allow_zero;

    std::size_t n_trials = 0, exp_bad = 0, cor_checked = 0, cor_bad = 0, lit_eval = 0, lit_bad = 0, lit_undef = 0;
    Json cells = Json::array();
    for (const auto& rec : records) {
        Json rows = Json::array();
        for (const auto& tr : rec.trials) {
            const auto& r = tr.report;
            ++n_trials;
            if (!r.expansion_matches) ++exp_bad;
            Json row;
            row["trial"] = tr.trial;
            row["forms"] = forms_to_string(tr.forms);
            row["det_direct"] = to_string(r.direct);
            row["det_expansion"] = to_string(r.expansion.value);
            row["match_expansion"] = r.expansion_matches;
            if (r.corollary) {
                ++cor_checked;
                if (!*r.corollary_matches) ++cor_bad;
                row["det_corollary"] = to_string(*r.corollary);
                row["match_corollary"] = *r.corollary_matches;
            }
            if (r.literal_error) ++lit_undef;
            for (const auto& l : r.literal) {
                ++lit_eval;
                if (!l.matches_direct) ++lit_bad;
            }
            row["paper_literal_audit"] = internal::literal_json(r, {});
            rows.push_back(std::move(row));
        }
        cells.push_back(Json{{"d", rec.d}, {"q", rec.q}, {"k", rec.k}, {"u", rec.u}, {"trials", std::move(rows)}});
    }
    const bool ok = exp_bad == 0 && cor_bad == 0;
    doc["summary"] = Json{{"cells", records.size()},
                          {"trials", n_trials},
                          {"expansion_mismatches", exp_bad},
                          {"corollary_checked", cor_checked},
                          {"corollary_mismatches", cor_bad},
                          {"paper_literal_evaluated", lit_eval},
                          {"paper_literal_mismatches", lit_bad},
                          {"paper_literal_undefined", lit_undef}};
    doc["all_match"] = ok;
    doc["cells"] = std::move(cells);
    return {ok ? 0 : 1, doc.dump()};
}

inline CommandResult cmd_verify(const RunConfig& cfg) { return verify_document(cfg, run_sweep(cfg)); }

inline std::string sweep_csv(const std::vector<CellRecord>& records, std::uint64_t seed)
{
    std::ostringstream os;
    os << "d,q,k,u,seed,trial,det_direct,det_expansion,det_corollary,match\n";
    for (const auto& rec : records)
        for (const auto& tr : rec.trials) {
            const auto& r = tr.report;
            os << rec.d << ',' << rec.q << ',' << rec.k << ',' << rec.u << ',' << seed << ',' << tr.trial << ','
               << to_string(r.direct) << ',' << to_string(r.expansion.value) << ','
               << (r.corollary ? to_string(*r.corollary) : std::string()) << ','
               << (trial_matches(r) ? "true" : "false") << '\n';
        }
    return os.str();
}

inline CommandResult cmd_sweep(const RunConfig& cfg)
{
    const auto records = run_sweep(cfg);
    bool ok = true;
    for (const auto& rec : records)
        for (const auto& tr : rec.trials) ok = ok && trial_matches(tr.report);

    if (cfg.output == OutputFormat::json) {
        Json doc = internal::header("sweep");
        Json rows = Json::array();
        for (const auto& rec : records)
            for (const auto& tr : rec.trials) {
                const auto& r = tr.report;
                rows.push_back(Json{{"d", rec.d},
                                    {"q", rec.q},
                                    {"k", rec.k},
                                    {"u", rec.u},
                                    {"seed", cfg.seed},
                                    {"trial", tr.trial},
                                    {"det_direct", to_string(r.direct)},
                                    {"det_expansion", to_string(r.expansion.value)},
                                    {"det_corollary", r.corollary ? Json(to_string(*r.corollary)) : Json(nullptr)},
                                    {"match", trial_matches(r)}});
            }
        doc["rows"] = std::move(rows);
        return {ok ? 0 : 1, doc.dump()};
    }
    return {ok ? 0 : 1, sweep_csv(records, cfg.seed)};
}

// ---------------------------------------------------------------------------
// slp

inline Json cmd_slp(const RunConfig& cfg)
{
    if (cfg.q < 1 || cfg.d < cfg.q) throw UsageError("need d >= q >= 1");
    auto forms = parse_forms(cfg.forms_text);
    if (forms.size() != 1) throw UsageError("slp takes exactly one form");
    auto rep = slp_check(RingParams(cfg.d, cfg.q), forms.front());

    Json doc = internal::header("slp");
    doc["d"] = cfg.d;
    doc["q"] = cfg.q;
    doc["form"] = forms_to_string(forms);
    Json dets = Json::array();
    for (const auto& e : rep.entries) dets.push_back(Json{{"k", e.k}, {"det", to_string(e.det)}, {"nonzero", e.nonzero}});
    doc["dets"] = std::move(dets);
    doc["slp"] = rep.holds;
    doc["first_failure"] = rep.first_failure ? Json(*rep.first_failure) : Json(nullptr);
    return doc;
}

// ---------------------------------------------------------------------------
// schur / duality

inline Partition parse_partition_flag(const std::string& text)
{
    try {
        return parse_partition(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

inline std::vector<Rational> parse_values_flag(const std::string& text)
{
    try {
        return parse_rational_list(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

inline CommandResult cmd_schur(const RunConfig& cfg)
{
    const Partition lam = parse_partition_flag(cfg.partition_text);
    const auto x = parse_values_flag(cfg.values_text);

    Json doc = internal::header("schur");
    doc["partition"] = to_string(lam);
    Json vals = Json::array();
    for (const auto& v : x) vals.push_back(to_string(v));
    doc["values"] = std::move(vals);

    const Rational jt = schur(lam, x);
    doc["jacobi_trudi_of_conjugate"] = to_string(jt);
    bool agree = true;
    auto attempt = [&](const char* key, auto&& fn) {
        try {
            Rational v = fn();
            doc[key] = to_string(v);
            agree = agree && v == jt;
        } catch (const std::exception& e) {
            doc[key] = nullptr;
            doc[std::string(key) + "_error"] = e.what();
        }
    };
    attempt("bialternant", [&] { return schur_bialternant(lam, x); });
    attempt("tableaux", [&] { return schur_tableaux(lam, x); });
    doc["agree"] = agree;
    return {agree ? 0 : 1, doc.dump()};
}

inline CommandResult cmd_duality(const RunConfig& cfg)
{
    const auto a = parse_values_flag(cfg.a_text);
    const auto b = parse_values_flag(cfg.b_text);
    Json doc = internal::header("duality");
    IdentityCheck res{};
    try {
        if (cfg.partition_text.empty()) {
            doc["identity"] = "rectangle_duality";
            doc["r"] = cfg.r;
            doc["m"] = cfg.m;
            res = duality_check(cfg.r, cfg.m, a, b);
        } else {
            const Partition lam = parse_partition_flag(cfg.partition_text);
            const int n = static_cast<int>(a.size());
            doc["identity"] = "rectangle_complement";
            doc["partition"] = to_string(lam);
            doc["r"] = cfg.r;
            doc["n"] = n;
            doc["mu"] = to_string(complement(lam, cfg.r, n));
            res = ec2_check(lam, cfg.r, n, a, b);
        }
    } catch (const UsageError&) {
        throw;
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
    doc["lhs"] = to_string(res.lhs);
    doc["rhs"] = to_string(res.rhs);
    doc["equal"] = res.equal;
    return {res.equal ? 0 : 1, doc.dump()};
}

// ---------------------------------------------------------------------------
// report

namespace internal {

template <ExactRing T>
CommandResult report_document(const RunConfig& cfg, const FormList<T>& forms, const std::vector<std::string>& names)
{
    const RingParams rp(cfg.d, cfg.q);
    const int n = rp.socle() - 2 * cfg.k;
    if (static_cast<int>(forms.size()) != n)
        throw UsageError("need d+q-2k = " + std::to_string(n) + " forms, got " + std::to_string(forms.size()));
    const int u = cfg.u.value_or(n);
    if (u < 0 || u > n) throw UsageError("need 0 <= u <= d+q-2k");

    auto rep = discrepancy_report(rp, cfg.k, u, SplitForms<T>::at(forms, static_cast<std::size_t>(u)));
    Json doc = header("report");
    doc["d"] = cfg.d;
    doc["q"] = cfg.q;
    doc["k"] = cfg.k;
    doc["u"] = u;
    doc["symbolic"] = cfg.symbolic;
    if (cfg.symbolic) doc["variables"] = names;
    doc["det_direct"] = render(rep.direct, names);
    doc["det_expansion"] = render(rep.expansion.value, names);
    doc["match_expansion"] = rep.expansion_matches;
    if (rep.corollary) {
        doc["det_corollary"] = render(*rep.corollary, names);
        doc["match_corollary"] = *rep.corollary_matches;
    }
    doc["expansion"] = expansion_json(rep.expansion, names);
    doc["paper_literal_audit"] = literal_json(rep, names);
    const bool ok = rep.expansion_matches && rep.corollary_matches.value_or(true);
    return {ok ? 0 : 1, doc.dump()};
}

} // namespace internal

inline CommandResult cmd_report(const RunConfig& cfg)
{
    internal::check_cell(cfg);
    if (cfg.symbolic) {
        const auto n = static_cast<std::size_t>(cfg.d + cfg.q - 2 * cfg.k);
        return internal::report_document(cfg, symbolic_forms(n), form_variable_names(n));
    }
    return internal::report_document(cfg, parse_forms(cfg.forms_text), {});
}

// ---------------------------------------------------------------------------
// dispatch and rendering

namespace internal {

inline std::string scalar_text(const Json& v)
{
    return v.is_string() ? v.get<std::string>() : v.dump();
}

/// Top-level fields as `key: value` lines.
inline std::string as_text(const Json& doc)
{
    std::string out;
    for (const auto& [key, value] : doc.items()) out += key + ": " + scalar_text(value) + "\n";
    return out;
}

/// Top-level scalar fields as a two-line CSV.
inline std::string as_csv(const Json& doc)
{
    std::string head, row;
    for (const auto& [key, value] : doc.items()) {
        if (value.is_structured()) continue;
        if (!head.empty()) {
            head += ',';
            row += ',';
        }
        head += key;
        row += scalar_text(value);
    }
    return head + "\n" + row + "\n";
}

inline std::string format_doc(const Json& doc, OutputFormat fmt)
{
    switch (fmt) {
    case OutputFormat::csv: return as_csv(doc);
    case OutputFormat::text: return as_text(doc);
    case OutputFormat::json: break;
    }
    return doc.dump() + "\n";
}

inline CommandResult reformat(CommandResult res, OutputFormat fmt)
{
    if (fmt == OutputFormat::json) {
        res.output += "\n";
        return res;
    }
    res.output = format_doc(Json::parse(res.output), fmt);
    return res;
}

} // namespace internal

inline Json error_document(const std::string& message)
{
    Json doc;
    doc["schema"] = kSchema;
    doc["error"] = message;
    return doc;
}

/// Runs one command; usage errors become exit code 2 with an error document.
inline CommandResult run(const RunConfig& cfg)
{
    try {
        switch (cfg.command) {
        case Command::det: return {0, internal::format_doc(cmd_det(cfg), cfg.output)};
        case Command::slp: return {0, internal::format_doc(cmd_slp(cfg), cfg.output)};
        case Command::verify: {
            const auto records = run_sweep(cfg);
            auto res = verify_document(cfg, records);
            if (cfg.output == OutputFormat::csv) return {res.exit_code, sweep_csv(records, cfg.seed)};
            return internal::reformat(std::move(res), cfg.output);
        }
        case Command::sweep: {
            auto res = cmd_sweep(cfg);
            if (cfg.output == OutputFormat::json) res.output += "\n";
            return res;
        }
        case Command::schur: return internal::reformat(cmd_schur(cfg), cfg.output);
        case Command::duality: return internal::reformat(cmd_duality(cfg), cfg.output);
        case Command::report: return internal::reformat(cmd_report(cfg), cfg.output);
        }
    } catch (const UsageError& e) {
        return {2, error_document(e.what()).dump() + "\n"};
    } catch (const std::invalid_argument& e) {
        return {2, error_document(e.what()).dump() + "\n"};
    } catch (const std::out_of_range& e) {
        return {2, error_document(e.what()).dump() + "\n"};
    }
    return {2, error_document("unknown command").dump() + "\n"};
}

} // namespace lefdet::cli
