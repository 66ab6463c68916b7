#ifndef ORDPOLY_POSET_HPP
#define ORDPOLY_POSET_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace ordpoly {

/// Finite poset on elements 0..n-1. The full relation is kept as per-element
/// bitmasks, so n is capped at 62. Immutable after construction; the order
/// axioms are validated by every constructor path.
class Poset {
public:
    static constexpr int kMaxElements = 62;

    /// The empty poset.
    Poset() = default;

    /// From up-set masks: up[a] = { b : a <= b }, reflexive bits included.
    /// Throws std::invalid_argument on any axiom violation.
    static Poset from_up_masks(int n, std::vector<std::uint64_t> up);

    /// From strict cover pairs (a, b) meaning a < b; takes the
    /// reflexive-transitive closure, then validates.
    static Poset from_covers(int n, const std::vector<std::pair<int, int>>& covers);

    int size() const { return n_; }
    bool leq(int a, int b) const { return (up_[a] >> b) & 1u; }
    std::uint64_t up_mask(int a) const { return up_[a]; }
    std::uint64_t down_mask(int a) const { return down_[a]; }

    /// Transitive reduction as a sorted list of (lower, upper) pairs.
    std::vector<std::pair<int, int>> covers() const;

    Poset dual() const;

private:
    int n_ = 0;
    std::vector<std::uint64_t> up_;    // up_[a] = mask of b with a <= b
    std::vector<std::uint64_t> down_;  // down_[a] = mask of b with b <= a
};

Poset make_antichain(int k);
Poset make_chain(int k);

/// One minimal element covered by k pairwise-incomparable elements.
Poset make_qk(int k);

/// Ordinal sum P (+) Q: every element of P below every element of Q,
/// internal orders kept; Q's elements are relabeled by +|P|.
Poset ordinal_sum(const Poset& p, const Poset& q);

/// Ordinal sum of an m-antichain and an n-antichain; P_{k,1} = Q_k.
Poset make_pmn(int m, int n);

/// The distributive lattice of order ideals (downward-closed subsets),
/// as bitmasks, sorted ascending, with the inclusion-order cover edges.
struct IdealLattice {
    int n = 0;
    std::vector<std::uint64_t> ideals;
    /// (i, j) with ideals[i] covered by ideals[j] in the inclusion order.
    std::vector<std::pair<int, int>> cover_edges;
};

/// All order-ideal bitmasks of p, sorted ascending. Throws
/// std::invalid_argument when p has more than max_elements elements
/// (2^n blowup guard).
std::vector<std::uint64_t> order_ideals(const Poset& p, int max_elements = 20);

/// order_ideals plus the inclusion-order cover edges.
IdealLattice ideal_lattice(const Poset& p, int max_elements = 20);

/// Calls visit once per linear extension, each a permutation (e_1..e_n)
/// listing elements bottom-up. Throws when p.size() > max_elements.
void for_each_linear_extension(const Poset& p,
                               const std::function<void(const std::vector<int>&)>& visit,
                               int max_elements = 12);

unsigned long count_linear_extensions(const Poset& p, int max_elements = 12);

/// Relabeling-invariant byte string: lexicographic minimum of the serialized
/// relation matrix over all permutations consistent with a
/// (down-degree, up-degree, height) pre-partition. Equal iff isomorphic.
/// Requires p.size() <= 9.
std::string canonical_form(const Poset& p);

/// Exactly one representative per isomorphism class on n elements, sorted by
/// canonical form. Built by adding one element (an ideal below, a compatible
/// filter above) to each class on n-1 elements. Requires n <= 8.
std::vector<Poset> enumerate_posets(int n);

} // namespace ordpoly

#endif
