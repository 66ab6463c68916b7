#ifndef ORDPOLY_SCAN_HPP
#define ORDPOLY_SCAN_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "ordpoly/positivity.hpp"

namespace ordpoly {

struct Violation {
    std::string id;       // canonical form (hex) or antichain composition
    nlohmann::json poset; // poset file format
    SignReport report;
};

struct ScanResult {
    int n = 0;
    long classes_scanned = 0;
    std::vector<Violation> violations;  // sorted by id
    double elapsed_seconds = 0.0;
};

/// Sign-checks ehrhart_by_counting for one representative per isomorphism
/// class, for every 1 <= n <= n_max. Representatives are dealt round-robin
/// to `shards` workers; the aggregate is deterministic regardless of shard
/// count. n_max <= 8 (the published 9..11 run took weeks of compute).
std::vector<ScanResult> scan_all_posets(int n_max, int shards = 1);

/// Sign-checks every ordinal sum of antichains of the given total size:
/// all 2^(total-1) compositions (a_1..a_r), h* = prod A_{a_i}. total <= 16.
ScanResult scan_antichain_sums(int total);

/// Table of reference Ehrhart polynomials of O_{P_{m,n}} for the nine pairs
/// (6,6), (6,7), (7,7), (7,8), (8,8), (8,9), (9,9), (9,10), (10,10):
/// coefficient strings ascending by degree.
struct Table1Row {
    unsigned m, n;
    std::vector<std::string> coefficients;
};
const std::vector<Table1Row>& table1_fixtures();

struct Table1Mismatch {
    unsigned m, n;
    int degree;
    std::string expected, computed;
};
struct Table1Report {
    int rows_checked = 0;
    std::vector<Table1Mismatch> mismatches;
    bool ok() const { return mismatches.empty(); }
};

/// Recomputes all nine rows via ehrhart_pmn and diffs them against the
/// stored fixtures coefficient by coefficient.
Table1Report run_table1();

} // namespace ordpoly

#endif
