#include <cstdio>
#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ordpoly/bernoulli.hpp"
#include "ordpoly/ehrhart.hpp"
#include "ordpoly/poset_io.hpp"
#include "ordpoly/positivity.hpp"
#include "ordpoly/scan.hpp"

using json = nlohmann::json;
using namespace ordpoly;

// Exit codes: 0 success / positive everywhere, 1 violation or fixture
// mismatch, 2 usage or bounds error. JSON lines on stdout, progress on
// stderr.

namespace {

void emit(const json& j) { std::cout << j.dump() << "\n"; }

json ehrhart_report(const EhrhartPolynomial& e, const HStarVector& h) {
    json j = ehrhart_to_json(e);
    j["h_star"] = hstar_to_json(h);
    return j;
}

json violation_to_json(const Violation& v) {
    return json{{"id", v.id}, {"poset", v.poset}, {"sign_report", sign_report_to_json(v.report)}};
}

json scan_result_to_json(const ScanResult& r) {
    json violations = json::array();
    for (const auto& v : r.violations) violations.push_back(violation_to_json(v));
    return json{{"n", r.n},
                {"classes_scanned", r.classes_scanned},
                {"violations", violations},
                {"elapsed_seconds", r.elapsed_seconds}};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Ehrhart polynomials of order polytopes and their coefficient signs"};
    app.require_subcommand(1);

    auto* cmd_bernoulli = app.add_subcommand("bernoulli", "Print n, B_n pairs up to a maximum");
    int bern_max = 20;
    cmd_bernoulli->add_option("--max", bern_max, "Largest index")->required();

    auto* cmd_ehrhart = app.add_subcommand("ehrhart", "Ehrhart polynomial of a poset file");
    std::string poset_path, method = "auto";
    cmd_ehrhart->add_option("--poset", poset_path, "Poset JSON file")->required();
    cmd_ehrhart->add_option("--method", method, "counting|hstar|auto")
        ->check(CLI::IsMember({"counting", "hstar", "auto"}));

    auto* cmd_qk = app.add_subcommand("qk", "Closed-form Ehrhart polynomial of Q_k");
    unsigned qk_k = 0;
    cmd_qk->add_option("--k", qk_k, "Number of covering elements")->required();

    auto* cmd_pmn = app.add_subcommand("pmn", "Ehrhart polynomial of P_{m,n}");
    unsigned pmn_m = 0, pmn_n = 0;
    cmd_pmn->add_option("--m", pmn_m)->required();
    cmd_pmn->add_option("--n", pmn_n)->required();

    auto* cmd_signs = app.add_subcommand("signs", "Coefficient sign report for Q_K");
    unsigned signs_k = 0;
    cmd_signs->add_option("--k", signs_k)->required();

    auto* cmd_counter = app.add_subcommand("counterexample",
                                           "Non-Ehrhart-positive order polytope by dimension");
    int counter_dim = 0;
    cmd_counter->add_option("--dim", counter_dim)->required();

    auto* cmd_scan = app.add_subcommand("scan", "Sign-check all poset classes up to n-max");
    int scan_n_max = 6, scan_shards = 1;
    cmd_scan->add_option("--n-max", scan_n_max, "Largest element count (<= 8)");
    cmd_scan->add_option("--shards", scan_shards, "Parallel workers");

    auto* cmd_sums = app.add_subcommand("scan-antichain-sums",
                                        "Sign-check every ordinal sum of antichains of a "
                                        "given total size");
    int sums_total = 0;
    cmd_sums->add_option("--total", sums_total)->required();

    auto* cmd_table1 = app.add_subcommand("table1",
                                          "Recompute the nine reference P_{m,n} rows and diff "
                                          "against stored fixtures");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cmd_bernoulli->parsed()) {
            if (bern_max < 0) throw std::invalid_argument("bernoulli: --max must be >= 0");
            for (int n = 0; n <= bern_max; ++n)
                emit(json{{"n", n}, {"B_n", bernoulli_number(n).str()}});
            return 0;
        }
        if (cmd_ehrhart->parsed()) {
            const Poset p = load_poset_file(poset_path);
            EhrhartPolynomial e;
            HStarVector h;
            if (method == "hstar") {
                h = hstar_via_linear_extensions(p);
                e = ehrhart_from_hstar(h);
            } else {
                e = ehrhart_by_counting(p);
                h = hstar_from_ehrhart(e);
            }
            emit(ehrhart_report(e, h));
            return 0;
        }
        if (cmd_qk->parsed()) {
            const EhrhartPolynomial e = ehrhart_qk_closed_form(qk_k);
            emit(ehrhart_report(e, hstar_from_ehrhart(e)));
            return 0;
        }
        if (cmd_pmn->parsed()) {
            if (pmn_m < 1 || pmn_n < 1) throw std::invalid_argument("pmn: m, n must be >= 1");
            const EhrhartPolynomial e = ehrhart_pmn(pmn_m, pmn_n);
            emit(ehrhart_report(e, hstar_from_ehrhart(e)));
            return 0;
        }
        if (cmd_signs->parsed()) {
            emit(sign_report_to_json(sign_report(ehrhart_qk_closed_form(signs_k))));
            return 0;
        }
        if (cmd_counter->parsed()) {
            const CounterexampleResult r = counterexample_for_dimension(counter_dim);
            switch (r.kind) {
                case CounterexampleResult::Kind::unknown:
                    emit(json{{"dim", counter_dim}, {"result", "unknown"}});
                    break;
                case CounterexampleResult::Kind::none_below_bound:
                    emit(json{{"dim", counter_dim}, {"result", "none exists <= proven bound"}});
                    break;
                case CounterexampleResult::Kind::poset:
                    emit(json{{"dim", counter_dim},
                              {"result", "counterexample"},
                              {"name", r.name},
                              {"poset", poset_to_json(*r.poset)},
                              {"sign_report", sign_report_to_json(*r.report)}});
                    break;
            }
            return 0;
        }
        if (cmd_scan->parsed()) {
            if (scan_n_max == 8)
                std::cerr << "scan: n = 8 covers 16999 classes and may take hours\n";
            bool violated = false;
            for (const ScanResult& r : scan_all_posets(scan_n_max, scan_shards)) {
                std::cerr << "scan: n = " << r.n << ", " << r.classes_scanned << " classes, "
                          << r.violations.size() << " violations, " << r.elapsed_seconds
                          << " s\n";
                emit(scan_result_to_json(r));
                violated = violated || !r.violations.empty();
            }
            return violated ? 1 : 0;
        }
        if (cmd_sums->parsed()) {
            const ScanResult r = scan_antichain_sums(sums_total);
            emit(scan_result_to_json(r));
            return r.violations.empty() ? 0 : 1;
        }
        if (cmd_table1->parsed()) {
            const Table1Report report = run_table1();
            json mismatches = json::array();
            for (const auto& m : report.mismatches)
                mismatches.push_back(json{{"m", m.m},
                                          {"n", m.n},
                                          {"degree", m.degree},
                                          {"expected", m.expected},
                                          {"computed", m.computed}});
            emit(json{{"rows_checked", report.rows_checked},
                      {"ok", report.ok()},
                      {"mismatches", mismatches}});
            return report.ok() ? 0 : 1;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
