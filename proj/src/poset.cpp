#include "bettisplit/poset.hpp"

#include <algorithm>
#include <numeric>

namespace bettisplit {

Mask Poset::max_elements(Mask subset) const {
    Mask out = 0;
    for_each_bit(subset, [&](int i) {
        // maximal in the induced order: nothing of `subset` strictly above
        if ((above_[static_cast<size_t>(i)] & subset & ~bit(i)) == 0) out |= bit(i);
    });
    return out;
}

bool Poset::is_downset(Mask subset) const {
    Mask closure = 0;
    for_each_bit(subset, [&](int i) { closure |= below_[static_cast<size_t>(i)]; });
    return closure == subset;
}

Mask Poset::down_closure(Mask gens, Mask within) const {
    Mask out = 0;
    for_each_bit(gens, [&](int i) { out |= below_[static_cast<size_t>(i)]; });
    return out & within;
}

std::vector<Mask> Poset::downsets(Mask within) const {
    // Depth-first over labels n-1..0: either omit the current element, or
    // include it together with its whole down-closure. Elements already
    // forced in by an earlier closure are skipped, so every downset of the
    // induced subposet appears exactly once. Omission is final because labels
    // are a linear extension: closures of lower labels cannot reintroduce a
    // higher one.
    std::vector<Mask> out;
    struct Frame {
        int next;
        Mask current;
    };
    std::vector<Frame> frames;
    frames.push_back({n_ - 1, 0});
    while (!frames.empty()) {
        Frame f = frames.back();
        frames.pop_back();
        while (f.next >= 0 && (!has_bit(within, f.next) || has_bit(f.current, f.next))) --f.next;
        if (f.next < 0) {
            out.push_back(f.current);
            continue;
        }
        Mask with_next = f.current | (below_[static_cast<size_t>(f.next)] & within);
        frames.push_back({f.next - 1, with_next});
        frames.push_back({f.next - 1, f.current});
    }
    std::sort(out.begin(), out.end(), [](Mask a, Mask b) {
        int pa = popcount(a), pb = popcount(b);
        if (pa != pb) return pa < pb;
        return a < b;
    });
    return out;
}

std::vector<Mask> Poset::downsets_containing(int p) const {
    std::vector<Mask> out;
    for (Mask d : downsets(all_mask()))
        if (has_bit(d, p)) out.push_back(d);
    return out;
}

std::vector<Multichain> Poset::multichains(int d) const {
    std::vector<Multichain> out;
    if (d < 1) return out;
    Multichain chain;
    chain.reserve(static_cast<size_t>(d));
    // DFS: extend by any element above the current last one.
    auto rec = [&](auto&& self, int depth, int last) -> void {
        if (depth == d) {
            out.push_back(chain);
            return;
        }
        Mask choices = (last < 0) ? all_mask() : above_[static_cast<size_t>(last)];
        for_each_bit(choices, [&](int next) {
            chain.push_back(next);
            self(self, depth + 1, next);
            chain.pop_back();
        });
    };
    rec(rec, 0, -1);
    return out;
}

std::vector<PosetMultideal> Poset::multideals(int d, Mask within) const {
    std::vector<PosetMultideal> out;
    if (d < 1) return out;
    std::vector<Mask> parts;
    parts.reserve(static_cast<size_t>(d));
    // parts[i] is a downset of what remains after removing earlier parts;
    // the last part takes everything left.
    auto rec = [&](auto&& self, int depth, Mask remaining) -> void {
        if (depth == d - 1) {
            parts.push_back(remaining);
            out.push_back(PosetMultideal{parts});
            parts.pop_back();
            return;
        }
        for (Mask alpha : downsets(remaining)) {
            parts.push_back(alpha);
            self(self, depth + 1, remaining & ~alpha);
            parts.pop_back();
        }
    };
    rec(rec, 0, within);
    return out;
}

std::vector<std::pair<int, int>> Poset::cover_relations() const {
    std::vector<std::pair<int, int>> covers;
    for (int b = 0; b < n_; ++b) {
        Mask strictly_below = below_[static_cast<size_t>(b)] & ~bit(b);
        for_each_bit(strictly_below, [&](int a) {
            // a < b is a cover iff nothing lies strictly between
            Mask between = above_[static_cast<size_t>(a)] & strictly_below & ~bit(a);
            if (between == 0) covers.emplace_back(a, b);
        });
    }
    return covers;
}

Poset Poset::from_covers(int n, const std::vector<std::pair<int, int>>& covers) {
    if (n < 0 || n > 64) throw std::invalid_argument("poset size must be between 0 and 64");
    std::vector<std::vector<int>> succ(static_cast<size_t>(n));
    std::vector<int> indegree(static_cast<size_t>(n), 0);
    for (auto [a, b] : covers) {
        if (a < 1 || a > n || b < 1 || b > n)
            throw std::invalid_argument("cover relation index out of range");
        if (a == b) throw CycleError("cover relation relates an element to itself", {a, a});
        succ[static_cast<size_t>(a - 1)].push_back(b - 1);
        ++indegree[static_cast<size_t>(b - 1)];
    }

    // Kahn topological sort, always taking the smallest available input
    // label so that an input that is already a linear extension keeps its
    // numbering.
    std::vector<int> order;
    order.reserve(static_cast<size_t>(n));
    std::vector<int> deg = indegree;
    Mask ready = 0;
    for (int i = 0; i < n; ++i)
        if (deg[static_cast<size_t>(i)] == 0) ready |= bit(i);
    while (ready) {
        int v = lowest_bit(ready);
        ready &= ~bit(v);
        order.push_back(v);
        for (int w : succ[static_cast<size_t>(v)])
            if (--deg[static_cast<size_t>(w)] == 0) ready |= bit(w);
    }
    if (static_cast<int>(order.size()) != n) {
        // Recover one cycle for the error message: walk unprocessed nodes.
        Mask leftover = 0;
        for (int i = 0; i < n; ++i)
            if (deg[static_cast<size_t>(i)] > 0) leftover |= bit(i);
        int start = lowest_bit(leftover);
        std::vector<int> path;
        std::vector<int> seen_at(static_cast<size_t>(n), -1);
        int v = start;
        while (seen_at[static_cast<size_t>(v)] < 0) {
            seen_at[static_cast<size_t>(v)] = static_cast<int>(path.size());
            path.push_back(v);
            for (int w : succ[static_cast<size_t>(v)])
                if (has_bit(leftover, w)) {
                    v = w;
                    break;
                }
        }
        std::vector<int> cycle;
        for (size_t k = static_cast<size_t>(seen_at[static_cast<size_t>(v)]); k < path.size(); ++k)
            cycle.push_back(path[k] + 1);
        cycle.push_back(v + 1);
        throw CycleError("cover relations contain a cycle", cycle);
    }

    Poset p;
    p.n_ = n;
    p.below_.assign(static_cast<size_t>(n), 0);
    p.above_.assign(static_cast<size_t>(n), 0);
    p.original_label_.resize(static_cast<size_t>(n));
    p.internal_index_.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        p.original_label_[static_cast<size_t>(i)] = order[static_cast<size_t>(i)] + 1;
        p.internal_index_[static_cast<size_t>(order[static_cast<size_t>(i)])] = i;
    }
    for (int i = 0; i < n; ++i) p.below_[static_cast<size_t>(i)] = bit(i);
    // Transitive closure: process elements in topological order, pushing each
    // completed closure into its cover successors. When i is reached, every
    // predecessor has already contributed, so below_[i] is complete.
    for (int i = 0; i < n; ++i) {
        int orig = order[static_cast<size_t>(i)];
        for (int w : succ[static_cast<size_t>(orig)]) {
            int wi = p.internal_index_[static_cast<size_t>(w)];
            p.below_[static_cast<size_t>(wi)] |= p.below_[static_cast<size_t>(i)];
        }
    }
    for (int i = 0; i < n; ++i)
        for_each_bit(p.below_[static_cast<size_t>(i)], [&](int j) {
            p.above_[static_cast<size_t>(j)] |= bit(i);
        });
    return p;
}

Poset Poset::induced(Mask subset) const {
    std::vector<int> elems = bits_of(subset);
    int m = static_cast<int>(elems.size());
    Poset q;
    q.n_ = m;
    q.below_.assign(static_cast<size_t>(m), 0);
    q.above_.assign(static_cast<size_t>(m), 0);
    q.original_label_.resize(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) {
        int lbl = original_label_[static_cast<size_t>(elems[static_cast<size_t>(i)])];
        q.original_label_[static_cast<size_t>(i)] = lbl;
        if (static_cast<int>(q.internal_index_.size()) < lbl) q.internal_index_.resize(lbl, -1);
        q.internal_index_[static_cast<size_t>(lbl) - 1] = i;
    }
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (leq(elems[static_cast<size_t>(i)], elems[static_cast<size_t>(j)])) {
                q.below_[static_cast<size_t>(j)] |= bit(i);
                q.above_[static_cast<size_t>(i)] |= bit(j);
            }
    return q;
}

std::vector<Poset> all_posets_up_to_iso(int n) {
    if (n < 0 || n > 7) throw std::invalid_argument("poset catalog supports 0 <= n <= 7");
    std::vector<Poset> out;
    if (n == 0) {
        out.push_back(Poset::from_covers(0, {}));
        return out;
    }
    std::vector<std::pair<int, int>> pairs;  // (a, b) with a < b, 0-based
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
    int npairs = static_cast<int>(pairs.size());

    std::vector<std::uint64_t> seen;
    for (Mask rel = 0; rel < (Mask{1} << npairs); ++rel) {
        bool r[7][7] = {};
        for (int k = 0; k < npairs; ++k)
            if (has_bit(rel, k)) r[pairs[static_cast<size_t>(k)].first][pairs[static_cast<size_t>(k)].second] = true;
        bool closed = true;
        for (int a = 0; a < n && closed; ++a)
            for (int b = 0; b < n && closed; ++b)
                for (int c = 0; c < n && closed; ++c)
                    if (r[a][b] && r[b][c] && !r[a][c]) closed = false;
        if (!closed) continue;

        // Canonical key: lexicographically least adjacency encoding over all
        // relabelings. Antisymmetry is automatic for upper-triangular input.
        std::vector<int> perm(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
        std::uint64_t best = ~std::uint64_t{0};
        do {
            std::uint64_t key = 0;
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    if (r[a][b])
                        key |= std::uint64_t{1}
                               << (perm[static_cast<size_t>(a)] * n + perm[static_cast<size_t>(b)]);
            best = std::min(best, key);
        } while (std::next_permutation(perm.begin(), perm.end()));

        if (std::find(seen.begin(), seen.end(), best) != seen.end()) continue;
        seen.push_back(best);
        std::vector<std::pair<int, int>> relations;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (r[a][b]) relations.emplace_back(a + 1, b + 1);
        out.push_back(Poset::from_covers(n, relations));
    }
    return out;
}

bool order_lt(const Poset& p, Mask alpha, Mask beta) {
    (void)p;
    if (alpha == beta) return false;
    int sa = popcount(alpha), sb = popcount(beta);
    if (sa != sb) return sa < sb;
    return highest_bit(alpha & ~beta) < highest_bit(beta & ~alpha);
}

}  // namespace bettisplit
