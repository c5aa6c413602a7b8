#include "lg/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <string>

namespace {

using nlohmann::ordered_json;

// exit-code contract: 0 success, 1 check failure, 2 input error,
// 3 scalar violation, 4 unsupported, 5 selftest failure
constexpr int kOk = 0;
constexpr int kCheckFailure = 1;
constexpr int kInputError = 2;
constexpr int kScalarViolation = 3;
constexpr int kUnsupported = 4;
constexpr int kSelftestFailure = 5;

struct Config {
    std::string format = "text";
    int workers = 1;
    bool verify_scalar = false;

    bool json() const { return format == "json"; }
    lg::LgOptions lg_options() const {
        lg::LgOptions o;
        o.workers = workers;
        o.verify_scalar = verify_scalar;
        return o;
    }
};

void emit(const Config& cfg, const ordered_json& doc,
          const std::function<void()>& text_printer) {
    if (cfg.json())
        std::cout << doc.dump(2) << "\n";
    else
        text_printer();
}

int cmd_lg(const Config& cfg, const std::string& braid_text, bool evaluations) {
    lg::BraidWord b = lg::BraidWord::parse(braid_text);
    lg::Laurent2 v = lg::lg_invariant(b, cfg.lg_options());
    const int span = v.is_zero() ? 0 : v.span();
    ordered_json doc;
    doc["braid"] = b.str();
    doc["components"] = b.components();
    doc["lg"] = v.str();
    doc["span"] = span;
    if (evaluations) {
        bool centered = true;
        lg::Laurent1 delta = lg::alexander_closure(b, &centered);
        doc["antidiag"] = v.specialize_antidiag().str();
        doc["diag"] = v.specialize_diag().str();
        doc["alexander"] = delta.str();
        doc["alexander_centered"] = centered;
    }
    emit(cfg, doc, [&] {
        std::cout << "LG = " << v.str() << "\n";
        std::cout << "span = " << span << "\n";
        if (evaluations) {
            std::cout << "LG(t0, -t0^-1) = " << doc["antidiag"].get<std::string>() << "\n";
            std::cout << "LG(t0, t0^-1) = " << doc["diag"].get<std::string>() << "\n";
            std::cout << "Delta = " << doc["alexander"].get<std::string>() << "\n";
        }
    });
    return kOk;
}

int cmd_alexander(const Config& cfg, const std::string& braid_text) {
    lg::BraidWord b = lg::BraidWord::parse(braid_text);
    bool centered = true;
    lg::Laurent1 d = lg::alexander_closure(b, &centered);
    ordered_json doc;
    doc["braid"] = b.str();
    doc["components"] = b.components();
    doc["alexander"] = d.str();
    doc["centered"] = centered;
    if (!d.is_zero()) doc["breadth"] = d.breadth();
    emit(cfg, doc, [&] {
        std::cout << "Delta = " << d.str() << "\n";
        if (!d.is_zero()) std::cout << "breadth = " << d.breadth() << "\n";
    });
    return kOk;
}

int cmd_span(const Config& cfg, const std::string& braid_text) {
    lg::BraidWord b = lg::BraidWord::parse(braid_text);
    lg::Laurent2 v = lg::lg_invariant(b, cfg.lg_options());
    const int span = v.is_zero() ? 0 : v.span();
    ordered_json doc;
    doc["braid"] = b.str();
    doc["span"] = span;
    emit(cfg, doc, [&] { std::cout << span << "\n"; });
    return kOk;
}

int cmd_family(const Config& cfg, const std::string& spec_text) {
    lg::FamilySpec spec = lg::FamilySpec::parse(spec_text);
    lg::Laurent2 v = spec.evaluate();
    lg::FamilyGenus fg = spec.genus();
    ordered_json doc;
    doc["family"] = spec_text;
    doc["lg"] = v.str();
    doc["span"] = v.is_zero() ? 0 : v.span();
    doc["genus"] = fg.g;
    doc["components"] = fg.mu;
    if (spec.kind == lg::FamilySpec::Kind::pretzel) {
        doc["normalized"] = {fg.normalized.p, fg.normalized.q, fg.normalized.r};
    }
    emit(cfg, doc, [&] {
        std::cout << "LG = " << v.str() << "\n";
        std::cout << "span = " << doc["span"].get<int>() << "\n";
        std::cout << "g = " << fg.g << ", mu = " << fg.mu << "\n";
        if (spec.kind == lg::FamilySpec::Kind::pretzel)
            std::cout << "normalized = (" << fg.normalized.p << ", " << fg.normalized.q
                      << ", " << fg.normalized.r << ")\n";
    });
    return kOk;
}

int cmd_check(const Config& cfg, const std::string& table, const std::string& output,
              bool no_identities) {
    lg::CheckOptions opts;
    opts.identities = !no_identities;
    opts.lg = cfg.lg_options();
    lg::CheckReport report = lg::run_table_file(table, opts);
    ordered_json doc = lg::report_json(report);
    if (!output.empty()) {
        std::ofstream out(output);
        if (!out) throw std::runtime_error("cannot write report \"" + output + "\"");
        out << doc.dump(2) << "\n";
    }
    emit(cfg, doc, [&] {
        for (const auto& r : report.records) {
            std::cout << r.name << ": span " << r.span;
            for (const auto& f : r.failures) std::cout << " FAIL[" << f << "]";
            std::cout << "\n";
        }
        std::cout << (report.ok() ? "ok" : "FAILED") << " (" << report.records.size()
                  << " records, " << report.hard_failures << " hard failures)\n";
    });
    return report.ok() ? kOk : kCheckFailure;
}

int cmd_selftest(const Config& cfg) {
    std::vector<std::pair<std::string, std::function<void()>>> suite;
    suite.emplace_back("r-matrix identities", [] {
        (void)lg::load_rmatrix();  // inverse pair, cubic, Yang-Baxter, traces
    });
    suite.emplace_back("markov scalars", [] {
        auto mc = lg::markov_property_check();
        if (!mc.ok || !mc.scalar || mc.alpha_pos != lg::Laurent2(1) ||
            mc.alpha_neg != lg::Laurent2(1))
            throw std::runtime_error("partial-trace scalars are not 1");
    });
    suite.emplace_back("skein coefficient recurrence", [] {
        lg::Rat2 e1{lg::Laurent2::t0() + lg::Laurent2::t1() - lg::Laurent2(1)};
        lg::Rat2 e2{lg::Laurent2::t0() + lg::Laurent2::t1() -
                    lg::Laurent2::t0() * lg::Laurent2::t1()};
        lg::Rat2 e3{lg::Laurent2::t0() * lg::Laurent2::t1()};
        for (int n = -2; n <= 3; ++n) {
            auto a = lg::half_twist_coeffs(n), b = lg::half_twist_coeffs(n + 1),
                 c = lg::half_twist_coeffs(n + 2), d = lg::half_twist_coeffs(n + 3);
            if (d.x != e1 * c.x + e2 * b.x - e3 * a.x ||
                d.y != e1 * c.y + e2 * b.y - e3 * a.y ||
                d.z != e1 * c.z + e2 * b.z - e3 * a.z)
                throw std::runtime_error("cubic recurrence failed at n = " +
                                         std::to_string(n));
        }
    });
    suite.emplace_back("twist knot oracle", [] {
        if (lg::lg_twist(1) != lg::lg_invariant(lg::BraidWord::parse("2: -1 -1 -1")))
            throw std::runtime_error("lg_twist(1) disagrees with the mirror trefoil");
        if (lg::lg_twist(-1) != lg::lg_invariant(lg::BraidWord::parse("3: 1 -2 1 -2")))
            throw std::runtime_error("lg_twist(-1) disagrees with the figure eight");
    });
    suite.emplace_back("alexander evaluations", [] {
        auto b = lg::BraidWord::parse("2: 1 1 1");
        auto v = lg::lg_invariant(b);
        auto d = lg::alexander_closure(b);
        if (v.specialize_antidiag() != d.squared_variable() ||
            v.specialize_diag() != d * d)
            throw std::runtime_error("evaluation identities failed on the trefoil");
    });

    ordered_json results = ordered_json::array();
    bool all_ok = true;
    for (const auto& [name, fn] : suite) {
        ordered_json item;
        item["name"] = name;
        try {
            fn();
            item["status"] = "pass";
        } catch (const std::exception& e) {
            item["status"] = "fail";
            item["error"] = e.what();
            all_ok = false;
        }
        results.push_back(std::move(item));
    }
    ordered_json doc;
    doc["identities"] = results;
    doc["ok"] = all_ok;
    emit(cfg, doc, [&] {
        for (const auto& item : results) {
            std::cout << item["name"].get<std::string>() << ": "
                      << item["status"].get<std::string>();
            if (item.contains("error"))
                std::cout << " (" << item["error"].get<std::string>() << ")";
            std::cout << "\n";
        }
        std::cout << (all_ok ? "selftest ok" : "selftest FAILED") << "\n";
    });
    return all_ok ? kOk : kSelftestFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-variable link invariant calculator and conjecture checker"};
    app.require_subcommand(1);

    Config cfg;
    app.add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--workers", cfg.workers, "Worker threads for the state sum")
        ->check(CLI::PositiveNumber);
    app.add_flag("--verify-scalar", cfg.verify_scalar,
                 "Verify the full partial-trace scalar property");

    std::string braid, family_spec, table, output;
    bool evaluations = false, no_identities = false;

    auto* c_lg = app.add_subcommand("lg", "Compute the invariant of a braid closure");
    c_lg->add_option("braid", braid, "Braid word \"n: g1 g2 ...\"")->required();
    c_lg->add_flag("--evaluations", evaluations,
                   "Also print the antidiag/diag specializations and Delta");

    auto* c_alex = app.add_subcommand("alexander", "Alexander polynomial of a closure");
    c_alex->add_option("braid", braid, "Braid word")->required();

    auto* c_span = app.add_subcommand("span", "Span of the invariant");
    c_span->add_option("braid", braid, "Braid word")->required();

    auto* c_family = app.add_subcommand("family", "Closed-form family evaluation");
    c_family->add_option("spec", family_spec, "twist:n | 2bridge:b1,b2,... | pretzel:p,q,r")
        ->required();

    auto* c_check = app.add_subcommand("check", "Run a knot table through the harness");
    c_check->add_option("table", table, "CSV knot table")->required();
    c_check->add_option("--output", output, "Write the JSON report to a file");
    c_check->add_flag("--no-identities", no_identities, "Skip the per-record identity suite");

    auto* c_selftest = app.add_subcommand("selftest", "Verify the algebraic identities");
    for (auto* sub : app.get_subcommands(nullptr)) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_lg->parsed()) return cmd_lg(cfg, braid, evaluations);
        if (c_alex->parsed()) return cmd_alexander(cfg, braid);
        if (c_span->parsed()) return cmd_span(cfg, braid);
        if (c_family->parsed()) return cmd_family(cfg, family_spec);
        if (c_check->parsed()) return cmd_check(cfg, table, output, no_identities);
        if (c_selftest->parsed()) return cmd_selftest(cfg);
    } catch (const lg::ScalarViolation& e) {
        std::cerr << "scalar violation: " << e.what() << "\n";
        return kScalarViolation;
    } catch (const lg::Unsupported& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return kUnsupported;
    } catch (const lg::ConventionError& e) {
        std::cerr << "identity failure: " << e.what() << "\n";
        return kSelftestFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}
