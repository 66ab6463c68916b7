#ifndef ORDPOLY_POSITIVITY_HPP
#define ORDPOLY_POSITIVITY_HPP

#include <optional>
#include <string>
#include <vector>

#include "ordpoly/ehrhart.hpp"
#include "ordpoly/poset.hpp"

namespace ordpoly {

enum class Sign { negative, zero, positive };

/// Exact sign of every Ehrhart coefficient of one polynomial. The constant,
/// leading, and second-highest coefficients are always positive; only the
/// middle degrees 1..dim-2 can go negative.
struct SignReport {
    int dim = 0;
    std::vector<Sign> signs;            // index = degree, 0..dim
    std::vector<int> negative_degrees;  // sorted ascending
    bool is_ehrhart_positive = false;   // all middle coefficients > 0
};

SignReport sign_report(const EhrhartPolynomial& e);

/// Predicted sign of the t^j coefficient of i(O_{Q_k}, t) for a middle
/// degree 1 <= j <= k-1: negative iff k-j+1 >= 20 and 4 | (k-j+1).
Sign qk_sign_predicted(unsigned k, unsigned j);

/// Number of negative coefficients of i(O_{Q_k}, t):
/// the count of multiples of 4 in [20, k], i.e. max(0, floor(k/4) - 4).
unsigned qk_negative_count(unsigned k);

/// Q_{4l+16}: the smallest member of the Q-family whose Ehrhart polynomial
/// has exactly l negative coefficients. Re-verified by sign_report.
Poset poset_with_negatives(unsigned ell);

/// Catalog of non-Ehrhart-positive order polytopes by dimension.
struct CounterexampleResult {
    enum class Kind { poset, unknown, none_below_bound };
    Kind kind;
    std::optional<Poset> poset;
    std::string name;  // "Q_20", "P_{7,7}", ... when kind == poset
    std::optional<SignReport> report;
};

/// d >= 21: Q_{d-1}; d in 14..20: P_{7,7} .. P_{10,10}; d in {12,13}:
/// unknown (open question); d <= 11: none exists (proven bound). Returned
/// posets carry a recomputed sign report confirming a negative coefficient.
CounterexampleResult counterexample_for_dimension(int d);

} // namespace ordpoly

#endif
