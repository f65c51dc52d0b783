#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>

#include "magiclab/constructions.hpp"
#include "magiclab/graph.hpp"
#include "magiclab/labeling.hpp"
#include "magiclab/search.hpp"

using namespace magiclab;

TEST_CASE("magic rectangles: Harmuth grid 2..8 with brute-force cross-check") {
    for (int m = 2; m <= 8; ++m)
        for (int n = m; n <= 8; ++n) {
            bool should_exist = (m - n) % 2 == 0 && !(m == 2 && n == 2);
            auto rect = magic_rectangle(m, n);
            CHECK(rect.has_value() == should_exist);
            if (rect) {
                CHECK(rect->m == m);
                CHECK(rect->n == n);
                CHECK(rect->valid());
            }
            if (m * n <= 16) {
                SearchOutcome oracle = brute_force_magic_rectangle(m, n);
                CHECK((oracle == SearchOutcome::found) == should_exist);
            }
        }
    CHECK_THROWS(magic_rectangle(1, 5));
}

TEST_CASE("magic rectangle sums for spec instances") {
    auto r24 = magic_rectangle(2, 4);
    REQUIRE(r24);
    for (const auto& row : r24->cells)
        CHECK(row[0] + row[1] + row[2] + row[3] == 18);

    auto r35 = magic_rectangle(3, 5);
    REQUIRE(r35);
    long long rowsum = 0;
    for (int x : r35->cells[0]) rowsum += x;
    CHECK(rowsum == 40);
    long long colsum = r35->cells[0][0] + r35->cells[1][0] + r35->cells[2][0];
    CHECK(colsum == 24);
}

TEST_CASE("triples partitions") {
    auto t9 = triples_partition(9);
    CHECK(t9.triples == std::vector<std::array<int, 3>>{
                            {1, 5, 9}, {3, 4, 8}, {2, 6, 7}});
    auto t15 = triples_partition(15);
    CHECK(t15.triples == std::vector<std::array<int, 3>>{
                             {1, 8, 15}, {3, 7, 14}, {5, 6, 13}, {2, 10, 12}, {4, 9, 11}});
    auto t3 = triples_partition(3);
    CHECK(t3.triples == std::vector<std::array<int, 3>>{{1, 2, 3}});
    for (const auto& t : t15.triples) CHECK(t[0] + t[1] + t[2] == 24);
    CHECK_THROWS(triples_partition(6));
    CHECK_THROWS(triples_partition(15 + 2));
}

TEST_CASE("cycle strong cycle labeling") {
    Labeling l = label_cycle_strong_cycle(15, 9);
    std::vector<int> first_row(l.values.begin(), l.values.begin() + 9);
    CHECK(first_row == std::vector<int>{1, 64, 127, 3, 66, 129, 2, 65, 128});
    Graph g = strong_product(new_cycle(15), new_cycle(9));
    Verdict v = verify_cdm(g, l);
    CHECK(v.magic);
    CHECK(v.constant == 612);

    // (l1, l2) injectivity and the per-neighborhood factor identities
    TriplePartition S = triples_partition(15), T = triples_partition(9);
    for (int x = 0; x < g.n(); ++x) {
        long long s1 = 0, s2 = 0;
        for (int y : g.closed_neighborhood(x)) {
            int i = y / 9, j = y % 9;
            s1 += S.triples[i / 3][j % 3];
            s2 += T.triples[j / 3][i % 3];
        }
        CHECK(s1 == 9 * (15 + 1) / 2);
        CHECK(s2 == 9 * (9 + 1) / 2);
    }

    Verdict k9 = verify_cdm(strong_product(new_cycle(3), new_cycle(3)),
                            label_cycle_strong_cycle(3, 3));
    CHECK(k9.magic);
    CHECK(k9.constant == 45);

    Verdict swapped = verify_cdm(strong_product(new_cycle(9), new_cycle(15)),
                                 label_cycle_strong_cycle(9, 15));
    CHECK(swapped.magic);
    CHECK(swapped.constant == 612);

    CHECK_THROWS(label_cycle_strong_cycle(5, 9));
}

TEST_CASE("cycle strong cycle feasibility and dispatch") {
    CHECK(cdm_cycle_strong_cycle_iff(3, 7).tag == "thm5.cond2");
    CHECK_FALSE(cdm_cycle_strong_cycle_iff(5, 9).feasible);
    CHECK(cdm_cycle_strong_cycle_iff(9, 9).tag == "thm5.cond1");
    CHECK_FALSE(cdm_cycle_strong_cycle_iff(3, 4).feasible);

    for (auto [m, n] : std::vector<std::pair<int, int>>{
             {3, 3}, {3, 5}, {3, 7}, {3, 9}, {9, 3}, {9, 9}, {5, 3}, {7, 3}}) {
        auto r = label_cycle_strong_cycle_any(m, n);
        REQUIRE(r.feasible);
        Verdict v = verify_cdm(strong_product(new_cycle(m), new_cycle(n)), r.labeling);
        CHECK(v.magic);
        CHECK(v.constant == 9LL * (m * n + 1) / 2);
    }
    CHECK_FALSE(label_cycle_strong_cycle_any(5, 9).feasible);
}

TEST_CASE("K_n strong G labelings") {
    // even branch
    Verdict a = verify_cdm(strong_product(new_complete(2), new_cycle(4)),
                           label_complete_strong(2, new_cycle(4)));
    CHECK(a.magic);
    CHECK(a.constant == 27);

    // odd-odd rectangle branch
    Verdict b = verify_cdm(strong_product(new_complete(3), new_cycle(5)),
                           label_complete_strong(3, new_cycle(5)));
    CHECK(b.magic);
    CHECK(b.constant == 72);

    CHECK_THROWS(label_complete_strong(1, new_cycle(5)));         // K_1 rejected
    CHECK_THROWS(label_complete_strong(3, new_cycle(4)));         // odd x even
    CHECK_THROWS(label_complete_strong(2, Graph(3)));             // 0-regular factor
    CHECK_THROWS(label_complete_strong(2, new_complete_bipartite(2, 3)));
}

TEST_CASE("circulant labelings (Theorem 6)") {
    auto syl2 = label_circulant(8, 2, 2);
    REQUIRE(syl2.feasible);
    CHECK(syl2.tag == "lemSyl2");
    // explicit Syl2 pattern
    CHECK(syl2.labeling.values == std::vector<int>{1, 2, 3, 4, 8, 7, 6, 5});
    Verdict v = verify_cdm(new_circulant(8, {2, 4}), syl2.labeling);
    CHECK(v.magic);
    CHECK(v.constant == 2 * (8 + 1));

    auto syl3 = label_circulant(15, 3, 2);
    REQUIRE(syl3.feasible);
    CHECK(syl3.tag == "lemSyl3");
    Verdict w = verify_cdm(new_circulant(15, {3, 6}), syl3.labeling);
    CHECK(w.magic);
    CHECK(w.constant == 40);

    auto even_c = label_circulant(10, 2, 2);
    CHECK_FALSE(even_c.feasible);
    CHECK(even_c.tag == "lemSyl3.parity");

    auto off = label_circulant(12, 2, 2);  // 12 is neither 8 nor 10
    CHECK_FALSE(off.feasible);
    CHECK(off.tag == "lemSyl1");
}

TEST_CASE("cK_n labelings") {
    auto three_k3 = label_disjoint_complete(3, 3);
    REQUIRE(three_k3.feasible);
    Verdict v = verify_cdm(new_disjoint_copies(3, new_complete(3)), three_k3.labeling);
    CHECK(v.magic);
    CHECK(v.constant == 15);

    auto two_k4 = label_disjoint_complete(2, 4);
    REQUIRE(two_k4.feasible);
    CHECK(two_k4.labeling.values == std::vector<int>{1, 8, 2, 7, 3, 6, 4, 5});
    Verdict w = verify_cdm(new_disjoint_copies(2, new_complete(4)), two_k4.labeling);
    CHECK(w.magic);
    CHECK(w.constant == 18);

    auto two_k3 = label_disjoint_complete(2, 3);
    CHECK_FALSE(two_k3.feasible);
    CHECK(two_k3.tag == "ckn.parity");
}

TEST_CASE("Simanjuntak predicates") {
    CHECK(ci_prop3(8, 2).feasible);
    CHECK_FALSE(ci_prop3(10, 2).feasible);
    CHECK_FALSE(ci_prop4(7, 2).feasible);
    CHECK_THROWS(ci_prop4(5, 2));  // needs n >= 2k+2
}

TEST_CASE("larger rectangles stay valid") {
    for (auto [m, n] : std::vector<std::pair<int, int>>{
             {9, 15}, {15, 9}, {2, 20}, {12, 16}, {5, 45}, {13, 13}}) {
        auto r = magic_rectangle(m, n);
        REQUIRE(r);
        CHECK(r->valid());
    }
}
