#pragma once

#include "lg/alexander.hpp"
#include "lg/families.hpp"
#include "lg/lgcore.hpp"

#include <json.hpp>

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace lg {

struct TableParseError : std::runtime_error {
    TableParseError(std::size_t row, const std::string& what)
        : std::runtime_error("row " + std::to_string(row) + ": " + what), row(row) {}
    std::size_t row;
};

/// One row of a knot table. A presentation is either "braid:n: g1 g2 ..."
/// or a family spec; optional fields are empty when unknown.
struct KnotRecord {
    std::string name;
    std::string presentation;
    std::optional<BraidWord> braid;
    std::optional<FamilySpec> family;
    std::optional<int> genus;
    int components = 1;
    std::optional<bool> alternating;
    std::optional<bool> fibered;
    std::optional<Laurent1> expected_alexander;
    std::optional<Laurent2> expected_lg;
};

enum class CheckStatus { pass, fail, equality, strict, skipped };

inline const char* status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::equality: return "equality";
        case CheckStatus::strict: return "strict";
        case CheckStatus::skipped: return "skipped";
    }
    return "?";
}

/// All nonzero coefficients with even i+j share one sign and all with odd
/// i+j share the opposite sign (either class may be empty).
inline bool ishii_sign_check(const Laurent2& p) {
    int even_sign = 0, odd_sign = 0;
    for (const auto& [e, c] : p.terms()) {
        const int s = c > 0 ? 1 : -1;
        int& slot = (e.i + e.j) % 2 == 0 ? even_sign : odd_sign;
        if (slot == 0)
            slot = s;
        else if (slot != s)
            return false;
    }
    return even_sign == 0 || odd_sign == 0 || even_sign != odd_sign;
}

namespace detail {

/// a == sign * t^shift * b, when such a unit exists.
inline std::optional<std::pair<int, int>> unit_ratio(const Laurent1& a, const Laurent1& b) {
    if (a.is_zero() || b.is_zero())
        return a.is_zero() && b.is_zero() ? std::make_optional(std::pair{1, 0}) : std::nullopt;
    const int shift = a.min_exp() - b.min_exp();
    for (int sign : {1, -1}) {
        bool ok = true;
        for (const auto& [k, c] : b.terms())
            if (a.coeff(k + shift) != sign * c) {
                ok = false;
                break;
            }
        if (ok && a.terms().size() == b.terms().size()) return std::pair{sign, shift};
    }
    return std::nullopt;
}

}  // namespace detail

/// Per-record computation and check outcomes.
struct RecordResult {
    std::string name;
    std::string presentation;
    int components = 1;
    Laurent2 lg;
    int span = 0;
    std::optional<Laurent1> delta;
    std::optional<int> delta_breadth;  // breadth of Delta, via antidiag when needed
    CheckStatus genus_bound = CheckStatus::skipped;
    CheckStatus alternating_eq = CheckStatus::skipped;
    CheckStatus fibered_monic = CheckStatus::skipped;
    CheckStatus golden = CheckStatus::skipped;
    CheckStatus identities = CheckStatus::skipped;
    bool lg_monic = false;
    bool ishii = false;
    bool half_integer = false;  // span == 2 (mod 4)
    bool delta_improved = false;  // span(LG) > 2 breadth(Delta)
    std::vector<std::string> failures;
};

struct CheckReport {
    std::vector<RecordResult> records;
    int hard_failures = 0;
    bool ok() const { return hard_failures == 0; }
};

struct CheckOptions {
    bool identities = true;  // run the per-record braid identity suite
    LgOptions lg{};
};

// ---------------------------------------------------------------------------
// table parsing

namespace detail {

/// Minimal CSV: cells may be double-quoted (then contain commas; "" escapes).
inline std::vector<std::string> csv_cells(const std::string& line, std::size_t row) {
    std::vector<std::string> out;
    std::string cell;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char ch = line[i];
        if (quoted) {
            if (ch == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cell += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cell += ch;
            }
        } else if (ch == '"' && cell.empty()) {
            quoted = true;
        } else if (ch == ',') {
            out.push_back(std::move(cell));
            cell.clear();
        } else {
            cell += ch;
        }
    }
    if (quoted) throw TableParseError(row, "unterminated quote");
    out.push_back(std::move(cell));
    return out;
}

inline std::string trimmed(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

inline std::optional<bool> parse_flag(const std::string& s, std::size_t row,
                                      const std::string& col) {
    if (s.empty()) return std::nullopt;
    if (s == "true" || s == "1" || s == "yes") return true;
    if (s == "false" || s == "0" || s == "no") return false;
    throw TableParseError(row, "bad boolean \"" + s + "\" in column " + col);
}

}  // namespace detail

inline KnotRecord parse_record(const std::vector<std::string>& cells, std::size_t row) {
    using detail::trimmed;
    if (cells.size() != 8)
        throw TableParseError(row, "expected 8 columns, got " + std::to_string(cells.size()));
    KnotRecord rec;
    rec.name = trimmed(cells[0]);
    rec.presentation = trimmed(cells[1]);
    if (rec.name.empty()) throw TableParseError(row, "empty name");
    try {
        if (rec.presentation.rfind("braid:", 0) == 0)
            rec.braid = BraidWord::parse(rec.presentation.substr(6));
        else
            rec.family = FamilySpec::parse(rec.presentation);
    } catch (const std::exception& e) {
        throw TableParseError(row, std::string("bad presentation: ") + e.what());
    }
    try {
        const std::string genus = trimmed(cells[2]);
        if (!genus.empty()) rec.genus = std::stoi(genus);
        if (rec.genus && *rec.genus < 0) throw TableParseError(row, "negative genus");
        const std::string comp = trimmed(cells[3]);
        rec.components = comp.empty() ? -1 : std::stoi(comp);
        rec.alternating = detail::parse_flag(trimmed(cells[4]), row, "alternating");
        rec.fibered = detail::parse_flag(trimmed(cells[5]), row, "fibered");
        const std::string ea = trimmed(cells[6]);
        if (!ea.empty()) rec.expected_alexander = Laurent1::parse(ea);
        const std::string el = trimmed(cells[7]);
        if (!el.empty()) rec.expected_lg = Laurent2::parse(el);
    } catch (const TableParseError&) {
        throw;
    } catch (const std::exception& e) {
        throw TableParseError(row, e.what());
    }
    const int mu = rec.braid ? rec.braid->components() : rec.family->components();
    if (rec.components == -1)
        rec.components = mu;
    else if (rec.components != mu)
        throw TableParseError(row, "declared components " + std::to_string(rec.components) +
                                       " but presentation has " + std::to_string(mu));
    return rec;
}

inline std::vector<KnotRecord> parse_table(std::istream& in) {
    std::vector<KnotRecord> out;
    std::string line;
    std::size_t row = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++row;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const std::string t = detail::trimmed(line);
        if (t.empty() || t[0] == '#') continue;
        if (!header_seen) {
            header_seen = true;
            if (t.rfind("name,", 0) == 0) continue;  // header row
        }
        out.push_back(parse_record(detail::csv_cells(line, row), row));
    }
    return out;
}

// ---------------------------------------------------------------------------
// checks

inline CheckStatus genus_bound_check(const KnotRecord& rec, RecordResult& res) {
    if (!rec.genus) return CheckStatus::skipped;
    const int bound = 2 * (2 * *rec.genus + rec.components - 1);
    if (res.span > bound) {
        res.failures.push_back("span " + std::to_string(res.span) + " exceeds 2(2g+mu-1) = " +
                               std::to_string(bound));
        return CheckStatus::fail;
    }
    if (res.delta_breadth) {
        if (*res.delta_breadth > 2 * *rec.genus + rec.components - 1) {
            res.failures.push_back("breadth(Delta) exceeds 2g+mu-1");
            return CheckStatus::fail;
        }
        if (2 * *res.delta_breadth > res.span) {
            res.failures.push_back("2 breadth(Delta) exceeds span(LG)");
            return CheckStatus::fail;
        }
        res.delta_improved = res.span > 2 * *res.delta_breadth;
    }
    return res.span == bound ? CheckStatus::equality : CheckStatus::strict;
}

inline CheckStatus alternating_equality_check(const KnotRecord& rec, RecordResult& res) {
    if (!rec.genus || !rec.alternating || !*rec.alternating) return CheckStatus::skipped;
    const int bound = 2 * (2 * *rec.genus + rec.components - 1);
    if (res.span == bound) return CheckStatus::pass;
    res.failures.push_back("alternating record: span " + std::to_string(res.span) +
                           " != 2(2g+mu-1) = " + std::to_string(bound));
    return CheckStatus::fail;
}

inline CheckStatus fibered_monic_check(const KnotRecord& rec, RecordResult& res) {
    res.lg_monic = !res.lg.is_zero() && res.lg.monic_extremes().monic;
    // the monic LG => monic Delta implication must never fail
    if (res.lg_monic && res.delta && !res.delta->is_zero()) {
        const Integer lead = res.delta->terms().rbegin()->second;
        if (lead != 1 && lead != -1) {
            res.failures.push_back("LG monic but Delta leading coefficient not a unit");
            return CheckStatus::fail;
        }
    }
    if (!rec.fibered || rec.components != 1) return CheckStatus::skipped;
    // the fibered <-> monic quadrant is conjecture data, never a hard failure
    return *rec.fibered == res.lg_monic ? CheckStatus::pass : CheckStatus::strict;
}

namespace detail {

inline bool check_evaluations(const BraidWord& b, const Laurent2& lg, RecordResult& res) {
    bool centered = true;
    const Laurent1 delta = alexander_closure(b, &centered);
    const Laurent1 anti = lg.specialize_antidiag();
    const Laurent1 diag = lg.specialize_diag();
    if (b.components() == 1) {
        if (anti != delta.squared_variable() || diag != delta * delta) {
            res.failures.push_back("evaluation identities failed (knot)");
            return false;
        }
        return true;
    }
    const auto u = unit_ratio(anti, delta.squared_variable());
    if (!u) {
        res.failures.push_back("antidiag differs from Delta(t^2) by more than a unit");
        return false;
    }
    if (!unit_ratio(diag, delta * delta)) {
        res.failures.push_back("diag differs from Delta^2 by more than a unit");
        return false;
    }
    return true;
}

inline bool identity_suite(const BraidWord& b, const Laurent2& lg, const LgOptions& opts,
                           RecordResult& res) {
    bool ok = true;
    if (lg.swapped() != lg) {
        res.failures.push_back("swap symmetry failed");
        ok = false;
    }
    if (lg_invariant(b.mirrored(), opts) != lg.inverted()) {
        res.failures.push_back("mirror law failed");
        ok = false;
    }
    // checks that enlarge the braid stay with small words: each extra strand
    // multiplies the state-sum cost by 4
    if (b.strands() <= 4) {
        if ((b.strands() > 1 && lg_invariant(b.conjugated(1), opts) != lg) ||
            lg_invariant(b.stabilized(true), opts) != lg ||
            lg_invariant(b.stabilized(false), opts) != lg) {
            res.failures.push_back("Markov invariance failed");
            ok = false;
        }
        const BraidWord tref = BraidWord::parse("2: 1 1 1");
        if (lg_invariant(connected_sum(b, tref), opts) != lg * lg_invariant(tref, opts)) {
            res.failures.push_back("connected sum law failed");
            ok = false;
        }
        if (!lg_invariant(split_union(b, tref), opts).is_zero()) {
            res.failures.push_back("split union law failed");
            ok = false;
        }
    }
    if (!check_evaluations(b, lg, res)) ok = false;
    return ok;
}

/// Delta from the antidiagonal specialization: LG(t0, -t0^-1) = Delta(t0^2).
inline std::optional<Laurent1> delta_from_antidiag(const Laurent2& lg) {
    const Laurent1 anti = lg.specialize_antidiag();
    Laurent1 out;
    for (const auto& [k, c] : anti.terms()) {
        if (k % 2 != 0) return std::nullopt;
        out += Laurent1::term(c, k / 2);
    }
    return out;
}

}  // namespace detail

inline RecordResult check_record(const KnotRecord& rec, const CheckOptions& opts = {}) {
    RecordResult res;
    res.name = rec.name;
    res.presentation = rec.presentation;
    res.components = rec.components;
    res.lg = rec.braid ? lg_invariant(*rec.braid, opts.lg) : rec.family->evaluate();
    res.span = res.lg.is_zero() ? 0 : res.lg.span();
    if (rec.braid) {
        res.delta = alexander_closure(*rec.braid);
    } else {
        res.delta = detail::delta_from_antidiag(res.lg);
    }
    if (res.delta && !res.delta->is_zero())
        res.delta_breadth = res.delta->breadth();
    else if (!res.lg.is_zero())
        res.delta_breadth = res.lg.specialize_antidiag().is_zero()
                                ? std::optional<int>{}
                                : res.lg.specialize_antidiag().breadth() / 2;
    res.ishii = !res.lg.is_zero() && ishii_sign_check(res.lg);
    res.half_integer = res.span % 4 == 2;
    res.genus_bound = genus_bound_check(rec, res);
    res.alternating_eq = alternating_equality_check(rec, res);
    res.fibered_monic = fibered_monic_check(rec, res);
    if (rec.expected_lg || rec.expected_alexander) {
        res.golden = CheckStatus::pass;
        if (rec.expected_lg && *rec.expected_lg != res.lg) {
            res.failures.push_back("expected_lg mismatch");
            res.golden = CheckStatus::fail;
        }
        if (rec.expected_alexander && (!res.delta || *rec.expected_alexander != *res.delta)) {
            res.failures.push_back("expected_alexander mismatch");
            res.golden = CheckStatus::fail;
        }
    }
    if (opts.identities && rec.braid)
        res.identities = detail::identity_suite(*rec.braid, res.lg, opts.lg, res)
                             ? CheckStatus::pass
                             : CheckStatus::fail;
    return res;
}

inline CheckReport run_table(const std::vector<KnotRecord>& records,
                             const CheckOptions& opts = {}) {
    CheckReport report;
    report.records.reserve(records.size());
    for (const auto& rec : records) {
        report.records.push_back(check_record(rec, opts));
        if (!report.records.back().failures.empty()) ++report.hard_failures;
    }
    return report;
}

inline CheckReport run_table_file(const std::string& path, const CheckOptions& opts = {}) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open table \"" + path + "\"");
    return run_table(parse_table(in), opts);
}

// ---------------------------------------------------------------------------
// report serialization

inline nlohmann::ordered_json report_json(const CheckReport& report) {
    nlohmann::ordered_json out;
    out["genus_bound_form"] = "span(LG) <= 2(2g + mu - 1) (reconstructed statement)";
    int pass = 0, fail = 0, equality = 0, strict = 0, skipped = 0;
    auto count = [&](CheckStatus s) {
        switch (s) {
            case CheckStatus::pass: ++pass; break;
            case CheckStatus::fail: ++fail; break;
            case CheckStatus::equality: ++equality; break;
            case CheckStatus::strict: ++strict; break;
            case CheckStatus::skipped: ++skipped; break;
        }
    };
    nlohmann::ordered_json recs = nlohmann::ordered_json::array();
    for (const auto& r : report.records) {
        nlohmann::ordered_json j;
        j["name"] = r.name;
        j["presentation"] = r.presentation;
        j["components"] = r.components;
        j["lg"] = r.lg.str();
        j["span"] = r.span;
        j["delta"] = r.delta ? nlohmann::ordered_json(r.delta->str())
                             : nlohmann::ordered_json(nullptr);
        j["delta_breadth"] = r.delta_breadth ? nlohmann::ordered_json(*r.delta_breadth)
                                             : nlohmann::ordered_json(nullptr);
        nlohmann::ordered_json checks;
        checks["genus_bound"] = status_name(r.genus_bound);
        checks["alternating_equality"] = status_name(r.alternating_eq);
        checks["fibered_monic"] = status_name(r.fibered_monic);
        checks["golden"] = status_name(r.golden);
        checks["identities"] = status_name(r.identities);
        j["checks"] = checks;
        for (CheckStatus s : {r.genus_bound, r.alternating_eq, r.fibered_monic, r.golden,
                              r.identities})
            count(s);
        j["lg_monic"] = r.lg_monic;
        j["ishii_signs"] = r.ishii;
        j["half_integer_span"] = r.half_integer;
        j["improves_alexander_bound"] = r.delta_improved;
        j["failures"] = r.failures;
        recs.push_back(std::move(j));
    }
    nlohmann::ordered_json summary;
    summary["records"] = report.records.size();
    summary["hard_failures"] = report.hard_failures;
    summary["pass"] = pass;
    summary["fail"] = fail;
    summary["equality"] = equality;
    summary["strict"] = strict;
    summary["skipped"] = skipped;
    out["summary"] = summary;
    out["records"] = std::move(recs);
    return out;
}

}  // namespace lg
