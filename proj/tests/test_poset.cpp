#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>

#include "bettisplit/poset.hpp"

using namespace bettisplit;

namespace {

// Figure-1 poset: p1 < p2, p3, p4; p3 < p5; p4 < p6.
Poset figure_poset() { return Poset::from_covers(6, {{1, 2}, {1, 3}, {1, 4}, {3, 5}, {4, 6}}); }

// Independent oracle: filter all 2^n subsets by downward closure using leq only.
std::vector<Mask> downsets_by_filter(const Poset& p) {
    std::vector<Mask> out;
    for (Mask s = 0; s < (Mask{1} << p.size()); ++s) {
        bool closed = true;
        for (int b = 0; b < p.size() && closed; ++b)
            if (has_bit(s, b))
                for (int a = 0; a < p.size(); ++a)
                    if (p.leq(a, b) && !has_bit(s, a)) {
                        closed = false;
                        break;
                    }
        if (closed) out.push_back(s);
    }
    return out;
}

}  // namespace

TEST_CASE("ingest keeps a linear extension and reports maxima") {
    Poset p = figure_poset();
    REQUIRE(p.size() == 6);
    // The input labeling is already a linear extension, so it is kept.
    for (int i = 0; i < 6; ++i) REQUIRE(p.original_label(i) == i + 1);
    REQUIRE(p.leq(0, 5));   // p1 < p6 transitively
    REQUIRE(!p.leq(1, 5));  // p2, p6 incomparable
    REQUIRE(p.max_elements(p.all_mask()) == mask_of({1, 4, 5}));  // Max(P) = {p2,p5,p6}
}

TEST_CASE("ingest relabels when the input is not a linear extension") {
    // p2 < p1: the single cover forces swapping the two labels.
    Poset p = Poset::from_covers(2, {{2, 1}});
    REQUIRE(p.leq(0, 1));
    REQUIRE(p.original_label(0) == 2);
    REQUIRE(p.original_label(1) == 1);
    REQUIRE(p.internal_index(2) == 0);
    REQUIRE(p.internal_index(1) == 1);
}

TEST_CASE("single element poset") {
    Poset p = Poset::from_covers(1, {});
    REQUIRE(p.size() == 1);
    REQUIRE(p.max_elements(p.all_mask()) == bit(0));
}

TEST_CASE("cyclic covers are rejected with the offending cycle") {
    try {
        Poset::from_covers(2, {{1, 2}, {2, 1}});
        FAIL("expected CycleError");
    } catch (const CycleError& e) {
        REQUIRE(e.cycle.size() >= 3);
        REQUIRE(e.cycle.front() == e.cycle.back());
        REQUIRE(std::count(e.cycle.begin(), e.cycle.end(), 1) >= 1);
        REQUIRE(std::count(e.cycle.begin(), e.cycle.end(), 2) >= 1);
    }
}

TEST_CASE("downsets of a 2-chain") {
    Poset p = Poset::from_covers(2, {{1, 2}});
    std::vector<Mask> expected = {0, bit(0), bit(0) | bit(1)};
    REQUIRE(p.downsets() == expected);
}

TEST_CASE("downsets of antichains have size 2^k") {
    for (int k = 0; k <= 5; ++k) {
        Poset p = Poset::from_covers(k, {});
        REQUIRE(p.downsets().size() == (size_t{1} << k));
    }
}

TEST_CASE("figure poset downsets match the subset-filter oracle") {
    Poset p = figure_poset();
    std::vector<Mask> fast = p.downsets();
    std::vector<Mask> slow = downsets_by_filter(p);
    REQUIRE(fast.size() == 19);
    std::vector<Mask> sorted_fast = fast;
    std::sort(sorted_fast.begin(), sorted_fast.end());
    std::sort(slow.begin(), slow.end());
    REQUIRE(sorted_fast == slow);
    for (Mask d : fast) REQUIRE(p.is_downset(d));
}

TEST_CASE("downset family is a distributive lattice (closed under union/intersection)") {
    for (const Poset& p : {figure_poset(), Poset::from_covers(4, {{1, 2}, {1, 3}, {2, 4}})}) {
        std::vector<Mask> ds = p.downsets();
        std::vector<Mask> sorted = ds;
        std::sort(sorted.begin(), sorted.end());
        for (Mask a : ds)
            for (Mask b : ds) {
                REQUIRE(std::binary_search(sorted.begin(), sorted.end(), a | b));
                REQUIRE(std::binary_search(sorted.begin(), sorted.end(), a & b));
            }
    }
}

TEST_CASE("removing a maximal element of a downset yields a downset") {
    Poset p = figure_poset();
    for (Mask d : p.downsets())
        for_each_bit(p.max_elements(d), [&](int v) { REQUIRE(p.is_downset(d & ~bit(v))); });
}

TEST_CASE("downsets containing p6 are exactly the six listed ones, in the tie-broken order") {
    Poset p = figure_poset();
    std::vector<Mask> got = p.downsets_containing(5);
    std::vector<Mask> expected = {
        mask_of({0, 3, 5}),           // {p1,p4,p6}
        mask_of({0, 1, 3, 5}),        // {p1,p4,p6,p2}
        mask_of({0, 2, 3, 5}),        // {p1,p4,p6,p3}
        mask_of({0, 1, 2, 3, 5}),     // {p1,p4,p6,p2,p3}
        mask_of({0, 2, 3, 4, 5}),     // {p1,p4,p6,p3,p5}
        mask_of({0, 1, 2, 3, 4, 5}),  // P
    };
    REQUIRE(got == expected);
    // Same set as filtering all downsets.
    std::vector<Mask> filtered;
    for (Mask d : p.downsets())
        if (has_bit(d, 5)) filtered.push_back(d);
    REQUIRE(got == filtered);
}

TEST_CASE("downsets containing the top of a chain / a single element") {
    Poset chain3 = Poset::from_covers(3, {{1, 2}, {2, 3}});
    REQUIRE(chain3.downsets_containing(2) == std::vector<Mask>{chain3.all_mask()});
    Poset one = Poset::from_covers(1, {});
    REQUIRE(one.downsets_containing(0) == std::vector<Mask>{bit(0)});
}

TEST_CASE("principal downsets") {
    Poset p = figure_poset();
    REQUIRE(p.down_closure(mask_of({1, 5})) == mask_of({0, 1, 3, 5}));  // <p2,p6>
    REQUIRE(p.down_closure(0) == 0);
    REQUIRE(p.down_closure(p.max_elements(p.all_mask())) == p.all_mask());
    REQUIRE(p.max_elements(mask_of({0, 3, 5})) == bit(5));  // Max(<p6>) = {p6}
    REQUIRE(p.max_elements(0) == 0);
}

TEST_CASE("multichains") {
    Poset p = figure_poset();
    REQUIRE(p.multichains(3).size() == 22);
    REQUIRE(p.multichains(1).size() == 6);

    Poset chain2 = Poset::from_covers(2, {{1, 2}});
    std::vector<Multichain> expected = {{0, 0}, {0, 1}, {1, 1}};
    REQUIRE(chain2.multichains(2) == expected);

    Poset anti = Poset::from_covers(4, {});
    REQUIRE(anti.multichains(3).size() == 4);  // constant sequences only

    // Every multichain is weakly increasing in the order.
    for (const Multichain& c : p.multichains(3))
        for (size_t t = 1; t < c.size(); ++t) REQUIRE(p.leq(c[t - 1], c[t]));
}

TEST_CASE("poset multideals") {
    Poset p = figure_poset();
    std::vector<PosetMultideal> all = p.multideals(3);
    PosetMultideal listed{{mask_of({0, 2}), mask_of({1, 4}), mask_of({3, 5})}};
    REQUIRE(std::find(all.begin(), all.end(), listed) != all.end());

    Poset empty = Poset::from_covers(0, {});
    for (int d = 1; d <= 3; ++d) {
        auto m = empty.multideals(d);
        REQUIRE(m.size() == 1);
        REQUIRE(m[0].parts == std::vector<Mask>(static_cast<size_t>(d), 0));
    }

    Poset chain2 = Poset::from_covers(2, {{1, 2}});
    std::vector<PosetMultideal> expected = {
        PosetMultideal{{0, chain2.all_mask()}},
        PosetMultideal{{bit(0), bit(1)}},
        PosetMultideal{{chain2.all_mask(), 0}},
    };
    REQUIRE(chain2.multideals(2) == expected);

    // d=1: the unique multideal is (P).
    REQUIRE(p.multideals(1) == std::vector<PosetMultideal>{PosetMultideal{{p.all_mask()}}});
}

TEST_CASE("multideal validity and bijection with nested downset chains") {
    std::vector<Poset> corpus = all_posets_up_to_iso(4);
    std::vector<Poset> more = all_posets_up_to_iso(3);
    corpus.insert(corpus.end(), more.begin(), more.end());
    corpus.push_back(Poset::from_covers(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}}));
    corpus.push_back(Poset::from_covers(5, {{1, 3}, {2, 3}, {3, 4}, {3, 5}}));
    corpus.push_back(Poset::from_covers(5, {}));

    for (const Poset& p : corpus) {
        std::vector<Mask> ds = p.downsets();
        std::vector<Mask> sorted = ds;
        std::sort(sorted.begin(), sorted.end());
        for (int d = 1; d <= 4; ++d) {
            std::vector<PosetMultideal> mds = p.multideals(d);
            // Validity: parts disjoint, cover P, partial unions are downsets of P.
            for (const PosetMultideal& md : mds) {
                Mask seen = 0;
                for (Mask part : md.parts) {
                    REQUIRE((seen & part) == 0);
                    seen |= part;
                    REQUIRE(std::binary_search(sorted.begin(), sorted.end(), seen));
                }
                REQUIRE(seen == p.all_mask());
            }
            // Injectivity (distinct tuples) ...
            std::vector<std::vector<Mask>> keys;
            for (const PosetMultideal& md : mds) keys.push_back(md.parts);
            std::sort(keys.begin(), keys.end());
            REQUIRE(std::adjacent_find(keys.begin(), keys.end()) == keys.end());
            // ... and surjectivity: count equals the number of weak chains of
            // d-1 downsets, computed by lattice DP.
            std::map<Mask, long long> chains;
            for (Mask b : ds) chains[b] = 1;
            for (int step = 1; step < d; ++step) {
                std::map<Mask, long long> next;
                for (Mask b : ds) {
                    long long total = 0;
                    for (Mask g : ds)
                        if (subset_of(g, b)) total += chains[g];
                    next[b] = total;
                }
                chains = next;
            }
            // chains[b] now counts weak chains g_1 <= ... <= g_d ending at b;
            // the bijection sends a multideal to its partial unions, whose
            // last entry is forced to P.
            REQUIRE(static_cast<long long>(mds.size()) == chains[p.all_mask()]);
        }
    }
}

TEST_CASE("order_lt sorts poset ideals by size then largest symmetric difference") {
    Poset p = figure_poset();
    std::vector<Mask> ideals = p.downsets_containing(5);
    for (size_t a = 0; a < ideals.size(); ++a) {
        REQUIRE(!order_lt(p, ideals[a], ideals[a]));
        for (size_t b = a + 1; b < ideals.size(); ++b) {
            REQUIRE(order_lt(p, ideals[a], ideals[b]));
            REQUIRE(!order_lt(p, ideals[b], ideals[a]));
        }
    }
    // The principal downset <p6> is the minimum.
    for (size_t b = 1; b < ideals.size(); ++b) REQUIRE(order_lt(p, ideals[0], ideals[b]));
    // Spot check the documented tie-break.
    REQUIRE(order_lt(p, mask_of({0, 1, 3, 5}), mask_of({0, 2, 3, 5})));
}

TEST_CASE("cover relations are recovered from the closure") {
    Poset p = figure_poset();
    std::vector<std::pair<int, int>> covers = p.cover_relations();
    std::sort(covers.begin(), covers.end());
    std::vector<std::pair<int, int>> expected = {{0, 1}, {0, 2}, {0, 3}, {2, 4}, {3, 5}};
    REQUIRE(covers == expected);
}

TEST_CASE("induced subposet") {
    Poset p = figure_poset();
    Poset q = p.induced(mask_of({0, 2, 4}));  // p1 < p3 < p5
    REQUIRE(q.size() == 3);
    REQUIRE(q.leq(0, 2));
    REQUIRE(q.original_label(0) == 1);
    REQUIRE(q.original_label(1) == 3);
    REQUIRE(q.original_label(2) == 5);
    Poset r = p.induced(mask_of({1, 4, 5}));  // Max(P): an antichain
    REQUIRE(r.downsets().size() == 8);
}

TEST_CASE("exhaustive poset catalogs have the known sizes") {
    REQUIRE(all_posets_up_to_iso(0).size() == 1);
    REQUIRE(all_posets_up_to_iso(1).size() == 1);
    REQUIRE(all_posets_up_to_iso(2).size() == 2);
    REQUIRE(all_posets_up_to_iso(3).size() == 5);
    REQUIRE(all_posets_up_to_iso(4).size() == 16);
}
