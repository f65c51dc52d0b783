#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "magiclab/constructions.hpp"
#include "magiclab/graph.hpp"
#include "magiclab/labeling.hpp"
#include "magiclab/search.hpp"

using namespace magiclab;

TEST_CASE("brute-force CDM on cycles") {
    SearchResult c3 = brute_force_cdm(new_cycle(3));
    REQUIRE(c3.outcome == SearchOutcome::found);
    CHECK(verify_cdm(new_cycle(3), c3.labeling).magic);

    for (int n = 4; n <= 10; ++n)
        CHECK(brute_force_cdm(new_cycle(n)).outcome == SearchOutcome::exhausted_negative);
}

TEST_CASE("brute-force CDM discovers the Prop 3 instance") {
    Graph g = new_circulant(8, {1, 3, 4});
    SearchResult r = brute_force_cdm(g);
    REQUIRE(r.outcome == SearchOutcome::found);
    Verdict v = verify_cdm(g, r.labeling);
    CHECK(v.magic);
}

TEST_CASE("budget outcomes are explicit") {
    SearchBudget tight;
    tight.max_vertices = 4;
    CHECK(brute_force_cdm(new_cycle(5), tight).outcome == SearchOutcome::budget_exceeded);

    SearchBudget node_capped;
    node_capped.node_limit = 3;
    CHECK(brute_force_cdm(new_circulant(8, {1, 3, 4}), node_capped).outcome ==
          SearchOutcome::budget_exceeded);

    SearchBudget cells;
    cells.max_cells = 8;
    CHECK(brute_force_magic_rectangle(3, 3, cells) == SearchOutcome::budget_exceeded);
}

TEST_CASE("brute-force rectangles agree with Harmuth for mn <= 16") {
    CHECK(brute_force_magic_rectangle(2, 2) == SearchOutcome::exhausted_negative);
    CHECK(brute_force_magic_rectangle(3, 3) == SearchOutcome::found);
    CHECK(brute_force_magic_rectangle(2, 3) == SearchOutcome::exhausted_negative);
    for (int m = 2; m <= 8; ++m)
        for (int n = m; m * n <= 16; ++n) {
            bool harmuth = (m - n) % 2 == 0 && !(m == 2 && n == 2);
            CHECK((brute_force_magic_rectangle(m, n) == SearchOutcome::found) == harmuth);
        }
}

TEST_CASE("brute-force distance antimagic") {
    SearchResult c5 = brute_force_distance_antimagic(new_cycle(5));
    REQUIRE(c5.outcome == SearchOutcome::found);
    CHECK(verify_distance_antimagic(new_cycle(5), c5.labeling));

    SearchResult k2 = brute_force_distance_antimagic(new_complete(2));
    REQUIRE(k2.outcome == SearchOutcome::found);

    // CDM implies a distance antimagic labeling exists (checked by search)
    std::vector<Graph> cdm_graphs = {new_cycle(3), new_complete(5),
                                     new_circulant(8, {2, 4}),
                                     new_disjoint_copies(2, new_complete(4)),
                                     strong_product(new_cycle(3), new_cycle(3))};
    for (const Graph& g : cdm_graphs) {
        REQUIRE(brute_force_cdm(g).outcome == SearchOutcome::found);
        SearchResult r = brute_force_distance_antimagic(g);
        REQUIRE(r.outcome == SearchOutcome::found);
        CHECK(verify_distance_antimagic(g, r.labeling));
    }
}

TEST_CASE("oracle agrees with Theorem 6 for n <= 11") {
    for (int c = 1; c <= 5; ++c)
        for (int k = 1; k <= 3; ++k)
            for (int n : {2 * k * c, (2 * k + 1) * c}) {
                if (n > 11 || n < 3 || (n != 2 * k * c && k * c > n / 2)) continue;
                std::set<int> steps;
                for (int s = 1; s <= k; ++s) steps.insert(std::min(s * c, n - s * c));
                if (steps.empty()) continue;
                Graph g = new_circulant(n, steps);
                LabelingResult pred = label_circulant(n, c, k);
                SearchOutcome oracle = brute_force_cdm(g).outcome;
                CHECK((oracle == SearchOutcome::found) == pred.feasible);
                if (pred.feasible) CHECK(verify_cdm(g, pred.labeling).magic);
            }
}

TEST_CASE("oracle agrees with the cK_n corollary for cn <= 11") {
    for (int c = 1; c <= 5; ++c)
        for (int n = 2; c * n <= 11; ++n) {
            Graph g = new_disjoint_copies(c, new_complete(n));
            LabelingResult pred = label_disjoint_complete(c, n);
            SearchOutcome oracle = brute_force_cdm(g).outcome;
            CHECK((oracle == SearchOutcome::found) == pred.feasible);
        }
}

TEST_CASE("oracle agrees with Theorem 5 at the in-budget corner") {
    Graph g = strong_product(new_cycle(3), new_cycle(3));
    CHECK(brute_force_cdm(g).outcome == SearchOutcome::found);
    CHECK(cdm_cycle_strong_cycle_iff(3, 3).feasible);
}

TEST_CASE("found labelings always pass the verifier") {
    for (const Graph& g : {new_complete(7), new_circulant(9, {3}),
                           new_complete_bipartite(2, 2)}) {
        SearchResult r = brute_force_cdm(g);
        if (r.outcome == SearchOutcome::found) CHECK(verify_cdm(g, r.labeling).magic);
    }
    // K_{2,2} = C_4 has no CDM labeling
    CHECK(brute_force_cdm(new_complete_bipartite(2, 2)).outcome ==
          SearchOutcome::exhausted_negative);
    // Ci(9,{3}) = 3C_3 is CDM (three triangles)
    CHECK(brute_force_cdm(new_circulant(9, {3})).outcome == SearchOutcome::found);
}
