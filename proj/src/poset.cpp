#include "ordpoly/poset.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>
#include <unordered_set>

namespace ordpoly {

namespace {

std::uint64_t bit(int i) { return std::uint64_t{1} << i; }

void check_size(int n, int max_elements, const char* what) {
    if (n > max_elements)
        throw std::invalid_argument(std::string(what) + ": poset has " + std::to_string(n) +
                                    " elements, bound is " + std::to_string(max_elements));
}

} // namespace

Poset Poset::from_up_masks(int n, std::vector<std::uint64_t> up) {
    if (n < 0 || n > kMaxElements)
        throw std::invalid_argument("Poset: element count out of range");
    if (static_cast<int>(up.size()) != n)
        throw std::invalid_argument("Poset: mask count does not match n");
    const std::uint64_t ground = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    for (int a = 0; a < n; ++a) {
        if (up[a] & ~ground) throw std::invalid_argument("Poset: relation outside ground set");
        if (!(up[a] & bit(a))) throw std::invalid_argument("Poset: relation not reflexive");
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (!(up[a] & bit(b))) continue;
            if (a != b && (up[b] & bit(a)))
                throw std::invalid_argument("Poset: relation not antisymmetric");
            if ((up[b] & ~up[a]))  // a <= b requires up(b) subseteq up(a)
                throw std::invalid_argument("Poset: relation not transitive");
        }
    Poset p;
    p.n_ = n;
    p.up_ = std::move(up);
    p.down_.assign(n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (p.up_[a] & bit(b)) p.down_[b] |= bit(a);
    return p;
}

Poset Poset::from_covers(int n, const std::vector<std::pair<int, int>>& covers) {
    if (n < 0 || n > kMaxElements)
        throw std::invalid_argument("Poset: element count out of range");
    std::vector<std::uint64_t> up(n, 0);
    for (int a = 0; a < n; ++a) up[a] = bit(a);
    for (const auto& [a, b] : covers) {
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw std::invalid_argument("Poset: cover pair out of range");
        if (a == b) throw std::invalid_argument("Poset: cover pair is reflexive");
        up[a] |= bit(b);
    }
    // Warshall-style transitive closure over the masks.
    for (int c = 0; c < n; ++c)
        for (int a = 0; a < n; ++a)
            if (up[a] & bit(c)) up[a] |= up[c];
    return from_up_masks(n, std::move(up));
}

std::vector<std::pair<int, int>> Poset::covers() const {
    std::vector<std::pair<int, int>> result;
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b) {
            if (a == b || !leq(a, b)) continue;
            // strictly-between witness kills the cover
            if ((up_[a] & down_[b]) == (bit(a) | bit(b))) result.emplace_back(a, b);
        }
    std::sort(result.begin(), result.end());
    return result;
}

Poset Poset::dual() const {
    Poset p;
    p.n_ = n_;
    p.up_ = down_;
    p.down_ = up_;
    return p;
}

Poset make_antichain(int k) {
    if (k < 0) throw std::invalid_argument("make_antichain: negative size");
    std::vector<std::uint64_t> up(k);
    for (int i = 0; i < k; ++i) up[i] = bit(i);
    return Poset::from_up_masks(k, std::move(up));
}

Poset make_chain(int k) {
    if (k < 1) throw std::invalid_argument("make_chain: size must be positive");
    std::vector<std::pair<int, int>> covers;
    for (int i = 0; i + 1 < k; ++i) covers.emplace_back(i, i + 1);
    return Poset::from_covers(k, covers);
}

Poset make_qk(int k) {
    if (k < 0) throw std::invalid_argument("make_qk: negative k");
    std::vector<std::pair<int, int>> covers;
    for (int i = 1; i <= k; ++i) covers.emplace_back(0, i);
    return Poset::from_covers(k + 1, covers);
}

Poset ordinal_sum(const Poset& p, const Poset& q) {
    const int np = p.size(), nq = q.size(), n = np + nq;
    std::vector<std::pair<int, int>> covers;
    for (const auto& [a, b] : p.covers()) covers.emplace_back(a, b);
    for (const auto& [a, b] : q.covers()) covers.emplace_back(a + np, b + np);
    if (np > 0 && nq > 0) {
        // maximal elements of p below minimal elements of q; transitive
        // closure supplies the rest of clause (c)
        for (int a = 0; a < np; ++a) {
            if (std::popcount(p.up_mask(a)) != 1) continue;
            for (int b = 0; b < nq; ++b)
                if (std::popcount(q.down_mask(b)) == 1) covers.emplace_back(a, b + np);
        }
    }
    return Poset::from_covers(n, covers);
}

Poset make_pmn(int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("make_pmn: sizes must be positive");
    return ordinal_sum(make_antichain(m), make_antichain(n));
}

std::vector<std::uint64_t> order_ideals(const Poset& p, int max_elements) {
    check_size(p.size(), max_elements, "order_ideals");
    const int n = p.size();
    std::vector<std::uint64_t> result;
    std::unordered_set<std::uint64_t> seen;
    std::vector<std::uint64_t> stack{0};
    seen.insert(0);
    while (!stack.empty()) {
        const std::uint64_t ideal = stack.back();
        stack.pop_back();
        result.push_back(ideal);
        for (int x = 0; x < n; ++x) {
            if (ideal & bit(x)) continue;
            if ((p.down_mask(x) & ~bit(x)) & ~ideal) continue;  // x not addable yet
            const std::uint64_t next = ideal | bit(x);
            if (seen.insert(next).second) stack.push_back(next);
        }
    }
    std::sort(result.begin(), result.end());
    return result;
}

IdealLattice ideal_lattice(const Poset& p, int max_elements) {
    IdealLattice lat;
    lat.n = p.size();
    lat.ideals = order_ideals(p, max_elements);
    std::map<std::uint64_t, int> index;
    for (int i = 0; i < static_cast<int>(lat.ideals.size()); ++i) index[lat.ideals[i]] = i;
    // in a distributive lattice of ideals, covers add exactly one element
    for (int i = 0; i < static_cast<int>(lat.ideals.size()); ++i)
        for (int x = 0; x < lat.n; ++x) {
            if (lat.ideals[i] & bit(x)) continue;
            auto it = index.find(lat.ideals[i] | bit(x));
            if (it != index.end()) lat.cover_edges.emplace_back(i, it->second);
        }
    std::sort(lat.cover_edges.begin(), lat.cover_edges.end());
    return lat;
}

namespace {

void extend(const Poset& p, std::uint64_t used, std::vector<int>& prefix,
            const std::function<void(const std::vector<int>&)>& visit) {
    const int n = p.size();
    if (static_cast<int>(prefix.size()) == n) {
        visit(prefix);
        return;
    }
    for (int x = 0; x < n; ++x) {
        if (used & bit(x)) continue;
        if ((p.down_mask(x) & ~bit(x)) & ~used) continue;
        prefix.push_back(x);
        extend(p, used | bit(x), prefix, visit);
        prefix.pop_back();
    }
}

} // namespace

void for_each_linear_extension(const Poset& p,
                               const std::function<void(const std::vector<int>&)>& visit,
                               int max_elements) {
    check_size(p.size(), max_elements, "for_each_linear_extension");
    std::vector<int> prefix;
    prefix.reserve(p.size());
    extend(p, 0, prefix, visit);
}

unsigned long count_linear_extensions(const Poset& p, int max_elements) {
    unsigned long count = 0;
    for_each_linear_extension(p, [&](const std::vector<int>&) { ++count; }, max_elements);
    return count;
}

namespace {

int element_height(const Poset& p, int x, std::vector<int>& memo) {
    if (memo[x] >= 0) return memo[x];
    int h = 0;
    for (int y = 0; y < p.size(); ++y)
        if (y != x && p.leq(y, x)) h = std::max(h, element_height(p, y, memo) + 1);
    return memo[x] = h;
}

std::string relation_string(const Poset& p, const std::vector<int>& perm) {
    // perm[pos] = original element placed at pos
    const int n = p.size();
    std::string s(static_cast<std::size_t>(n) * n, '0');
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (p.leq(perm[a], perm[b])) s[static_cast<std::size_t>(a) * n + b] = '1';
    return s;
}

void minimize_over_blocks(const Poset& p, std::vector<std::vector<int>>& blocks,
                          std::size_t level, std::vector<int>& perm, std::string& best) {
    if (level == blocks.size()) {
        std::string s = relation_string(p, perm);
        if (best.empty() || s < best) best = std::move(s);
        return;
    }
    auto& block = blocks[level];
    std::sort(block.begin(), block.end());
    const std::size_t offset = perm.size();
    do {
        perm.insert(perm.end(), block.begin(), block.end());
        minimize_over_blocks(p, blocks, level + 1, perm, best);
        perm.resize(offset);
    } while (std::next_permutation(block.begin(), block.end()));
}

} // namespace

std::string canonical_form(const Poset& p) {
    check_size(p.size(), 9, "canonical_form");
    const int n = p.size();
    std::vector<int> height(n, -1);
    for (int x = 0; x < n; ++x) element_height(p, x, height);

    // pre-partition by (down-degree, up-degree, height); only permutations
    // preserving the partition can realize the minimum
    std::map<std::tuple<int, int, int>, std::vector<int>> classes;
    for (int x = 0; x < n; ++x)
        classes[{std::popcount(p.down_mask(x)), std::popcount(p.up_mask(x)), height[x]}]
            .push_back(x);
    std::vector<std::vector<int>> blocks;
    std::string signature = std::to_string(n) + ";";
    for (auto& [key, members] : classes) {
        signature += std::to_string(std::get<0>(key)) + "," + std::to_string(std::get<1>(key)) +
                     "," + std::to_string(std::get<2>(key)) + "x" +
                     std::to_string(members.size()) + ";";
        blocks.push_back(std::move(members));
    }

    std::string best;
    std::vector<int> perm;
    perm.reserve(n);
    minimize_over_blocks(p, blocks, 0, perm, best);
    return signature + best;
}

std::vector<Poset> enumerate_posets(int n) {
    if (n < 1) throw std::invalid_argument("enumerate_posets: n must be positive");
    if (n > 8)
        throw std::invalid_argument(
            "enumerate_posets: n capped at 8 (the published 9..11 scan took weeks)");

    std::vector<Poset> level{make_antichain(1)};
    for (int m = 2; m <= n; ++m) {
        std::map<std::string, Poset> next;
        for (const Poset& p : level) {
            const auto ideals = order_ideals(p, 8);
            const auto filters = order_ideals(p.dual(), 8);
            for (std::uint64_t down : ideals) {
                // the new element's up-set must lie above all of its down-set
                std::uint64_t allowed = ~std::uint64_t{0};
                for (int d = 0; d < p.size(); ++d)
                    if (down & bit(d)) allowed &= p.up_mask(d);
                for (std::uint64_t upset : filters) {
                    if (upset & down) continue;
                    if (upset & ~allowed) continue;
                    std::vector<std::uint64_t> up(m);
                    for (int a = 0; a < p.size(); ++a) {
                        up[a] = p.up_mask(a);
                        if (down & bit(a)) up[a] |= bit(m - 1) | upset;
                    }
                    up[m - 1] = bit(m - 1) | upset;
                    Poset candidate = Poset::from_up_masks(m, std::move(up));
                    next.emplace(canonical_form(candidate), candidate);
                }
            }
        }
        level.clear();
        for (auto& [form, p] : next) level.push_back(std::move(p));
    }
    return level;
}

} // namespace ordpoly
