#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bettisplit/subset.hpp"

namespace bettisplit {

class Poset;

/// A poset ideal (downward closed subset), tied to its parent poset.
struct Downset {
    Mask members = 0;
    const Poset* parent = nullptr;

    bool operator==(const Downset& o) const { return members == o.members; }
};

/// Weakly increasing sequence of element indices (0-based), repetitions allowed.
using Multichain = std::vector<int>;

/// Degree-d multideal: parts[i] is a downset of the poset minus the earlier
/// parts; the parts partition the whole element set.
struct PosetMultideal {
    std::vector<Mask> parts;

    bool operator==(const PosetMultideal& o) const { return parts == o.parts; }
};

struct CycleError : std::runtime_error {
    std::vector<int> cycle;  // 1-based input labels, in order

    CycleError(std::string msg, std::vector<int> cyc)
        : std::runtime_error(std::move(msg)), cycle(std::move(cyc)) {}
};

/// A finite poset on elements 0..n-1, stored as the reflexive-transitive
/// closure of its order relation. The labeling is always a linear extension:
/// i < j whenever element i is strictly below element j. Construction from
/// cover relations relabels as needed and keeps the permutation so results
/// can be reported in the caller's numbering.
class Poset {
public:
    Poset() = default;

    int size() const { return n_; }
    bool empty() const { return n_ == 0; }

    /// True iff element a <= b in the order.
    bool leq(int a, int b) const { return has_bit(below_[static_cast<size_t>(b)], a); }

    /// Elements <= i, as a mask (includes i).
    Mask below(int i) const { return below_[static_cast<size_t>(i)]; }

    /// Elements >= i, as a mask (includes i).
    Mask above(int i) const { return above_[static_cast<size_t>(i)]; }

    Mask all_mask() const { return n_ == 64 ? ~Mask{0} : (bit(n_) - 1); }

    /// Original (input) 1-based label of internal element i.
    int original_label(int i) const { return original_label_[static_cast<size_t>(i)]; }

    /// Internal index of the original 1-based input label.
    int internal_index(int original_1based) const {
        return internal_index_[static_cast<size_t>(original_1based) - 1];
    }

    /// Maximal elements of the induced subposet on `subset`.
    Mask max_elements(Mask subset) const;

    bool is_downset(Mask subset) const;

    /// Down-closure of `gens` within the induced subposet on `within`.
    Mask down_closure(Mask gens, Mask within) const;

    Mask down_closure(Mask gens) const { return down_closure(gens, all_mask()); }

    /// All downsets of the induced subposet on `within`, each exactly once.
    /// Enumeration is depth-first in label order with down-closure pruning.
    std::vector<Mask> downsets(Mask within) const;

    std::vector<Mask> downsets() const { return downsets(all_mask()); }

    /// Downsets of P containing element p, in the order produced by downsets().
    std::vector<Mask> downsets_containing(int p) const;

    /// All multichains of length d (d >= 1).
    std::vector<Multichain> multichains(int d) const;

    /// All poset multideals of degree d of the induced subposet on `within`.
    std::vector<PosetMultideal> multideals(int d, Mask within) const;

    std::vector<PosetMultideal> multideals(int d) const { return multideals(d, all_mask()); }

    /// Cover relations (a, b) meaning a < b with nothing in between, in
    /// internal indices.
    std::vector<std::pair<int, int>> cover_relations() const;

    /// Builds a poset from cover relations (1-based pairs (a, b) meaning
    /// p_a < p_b). Throws CycleError when the covers are cyclic.
    static Poset from_covers(int n, const std::vector<std::pair<int, int>>& covers);

    /// Induced subposet on `subset`, re-indexed to 0..|subset|-1 in label
    /// order. Rarely needed; most operations take a subset mask instead.
    Poset induced(Mask subset) const;

private:
    int n_ = 0;
    std::vector<Mask> below_;  // below_[i] = {j : j <= i}
    std::vector<Mask> above_;  // above_[i] = {j : j >= i}
    std::vector<int> original_label_;
    std::vector<int> internal_index_;
};

inline Mask max_elements(const Downset& d) { return d.parent->max_elements(d.members); }

/// Strict total order on the downsets containing the distinguished element:
/// first by size, ties broken by the largest element of the symmetric
/// difference (the side holding it is the larger downset).
bool order_lt(const Poset& p, Mask alpha, Mask beta);

/// Every poset on n elements (n <= 7), one representative per isomorphism
/// class, enumerated as transitively closed upper-triangular relations and
/// deduplicated over all label permutations.
std::vector<Poset> all_posets_up_to_iso(int n);

}  // namespace bettisplit
