#include "ordpoly/scan.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <thread>

#include "ordpoly/poset_io.hpp"

namespace ordpoly {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

} // namespace

std::vector<ScanResult> scan_all_posets(int n_max, int shards) {
    if (n_max < 1 || n_max > 8)
        throw std::invalid_argument(
            "scan_all_posets: n_max must be in [1, 8]; the published n = 11 run took about "
            "three weeks of compute");
    if (shards < 1) throw std::invalid_argument("scan_all_posets: shards must be positive");

    std::vector<ScanResult> results;
    for (int n = 1; n <= n_max; ++n) {
        const auto start = Clock::now();
        ScanResult result;
        result.n = n;

        // enumerate_posets returns representatives sorted by canonical form;
        // deal them round-robin so the aggregate is shard-count independent
        const std::vector<Poset> reps = enumerate_posets(n);
        result.classes_scanned = static_cast<long>(reps.size());
        std::vector<std::vector<Violation>> found(shards);
        auto worker = [&](int shard) {
            for (std::size_t i = shard; i < reps.size(); i += shards) {
                const SignReport report = sign_report(ehrhart_by_counting(reps[i]));
                if (!report.is_ehrhart_positive)
                    found[shard].push_back(
                        {canonical_form(reps[i]), poset_to_json(reps[i]), report});
            }
        };
        if (shards == 1) {
            worker(0);
        } else {
            std::vector<std::thread> pool;
            for (int s = 0; s < shards; ++s) pool.emplace_back(worker, s);
            for (auto& t : pool) t.join();
        }
        for (auto& part : found)
            result.violations.insert(result.violations.end(),
                                     std::make_move_iterator(part.begin()),
                                     std::make_move_iterator(part.end()));
        std::sort(result.violations.begin(), result.violations.end(),
                  [](const Violation& a, const Violation& b) { return a.id < b.id; });
        result.elapsed_seconds = seconds_since(start);
        results.push_back(std::move(result));
    }
    return results;
}

ScanResult scan_antichain_sums(int total) {
    if (total < 1 || total > 16)
        throw std::invalid_argument("scan_antichain_sums: total must be in [1, 16]");
    const auto start = Clock::now();
    ScanResult result;
    result.n = total;

    // compositions (a_1..a_r) of total, lexicographic
    std::vector<int> parts;
    auto recurse = [&](auto&& self, int remaining) -> void {
        if (remaining == 0) {
            ++result.classes_scanned;
            HStarVector h{{Integer(1)}};
            for (int a : parts) h = hstar_ordinal_sum(h, eulerian_polynomial(a, 16));
            const SignReport report = sign_report(ehrhart_from_hstar(h));
            if (!report.is_ehrhart_positive) {
                std::string id = "(";
                Poset p;
                for (std::size_t i = 0; i < parts.size(); ++i) {
                    id += (i ? "," : "") + std::to_string(parts[i]);
                    p = ordinal_sum(p, make_antichain(parts[i]));
                }
                result.violations.push_back({id + ")", poset_to_json(p), report});
            }
            return;
        }
        for (int a = 1; a <= remaining; ++a) {
            parts.push_back(a);
            self(self, remaining - a);
            parts.pop_back();
        }
    };
    recurse(recurse, total);
    std::sort(result.violations.begin(), result.violations.end(),
              [](const Violation& a, const Violation& b) { return a.id < b.id; });
    result.elapsed_seconds = seconds_since(start);
    return result;
}

} // namespace ordpoly
