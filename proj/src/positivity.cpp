#include "ordpoly/positivity.hpp"

#include <stdexcept>

namespace ordpoly {

SignReport sign_report(const EhrhartPolynomial& e) {
    SignReport r;
    r.dim = e.dim;
    r.signs.resize(e.dim + 1);
    for (int d = 0; d <= e.dim; ++d) {
        const int s = e.poly.coeff(d).sign();
        r.signs[d] = s < 0 ? Sign::negative : (s > 0 ? Sign::positive : Sign::zero);
        if (s < 0) r.negative_degrees.push_back(d);
    }
    r.is_ehrhart_positive = true;
    for (int d = 1; d <= e.dim - 2; ++d)
        if (r.signs[d] != Sign::positive) r.is_ehrhart_positive = false;
    return r;
}

Sign qk_sign_predicted(unsigned k, unsigned j) {
    if (j < 1 || j > k - 1 || k < 2)
        throw std::invalid_argument("qk_sign_predicted: j must be in [1, k-1]");
    const unsigned r = k - j + 1;
    return (r >= 20 && r % 4 == 0) ? Sign::negative : Sign::positive;
}

unsigned qk_negative_count(unsigned k) {
    return k / 4 >= 5 ? k / 4 - 4 : 0;  // multiples of 4 in [20, k]
}

Poset poset_with_negatives(unsigned ell) {
    if (ell < 1) throw std::invalid_argument("poset_with_negatives: ell must be positive");
    const unsigned k = 4 * ell + 16;
    const auto report = sign_report(ehrhart_qk_closed_form(k));
    if (report.negative_degrees.size() != ell)
        throw std::logic_error("poset_with_negatives: verification failed for Q_" +
                               std::to_string(k));
    return make_qk(static_cast<int>(k));
}

CounterexampleResult counterexample_for_dimension(int d) {
    if (d < 1) throw std::invalid_argument("counterexample_for_dimension: d must be positive");
    if (d <= 11) return {CounterexampleResult::Kind::none_below_bound, std::nullopt, "", std::nullopt};
    if (d == 12 || d == 13)
        return {CounterexampleResult::Kind::unknown, std::nullopt, "", std::nullopt};

    Poset p;
    std::string name;
    SignReport report;
    if (d >= 21) {
        const unsigned k = static_cast<unsigned>(d) - 1;
        p = make_qk(static_cast<int>(k));
        name = "Q_" + std::to_string(k);
        report = sign_report(ehrhart_qk_closed_form(k));
    } else {
        // dimensions 14..20: the ordinal sums of two large antichains
        static constexpr std::pair<unsigned, unsigned> kPairs[] = {
            {7, 7}, {7, 8}, {8, 8}, {8, 9}, {9, 9}, {9, 10}, {10, 10}};
        const auto [m, n] = kPairs[d - 14];
        p = make_pmn(static_cast<int>(m), static_cast<int>(n));
        name = "P_{" + std::to_string(m) + "," + std::to_string(n) + "}";
        report = sign_report(ehrhart_pmn(m, n));
    }
    if (report.negative_degrees.empty())
        throw std::logic_error("counterexample_for_dimension: " + name +
                               " unexpectedly Ehrhart positive");
    return {CounterexampleResult::Kind::poset, std::move(p), std::move(name),
            std::move(report)};
}

} // namespace ordpoly
