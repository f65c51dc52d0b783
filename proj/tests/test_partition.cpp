#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "magiclab/graph.hpp"
#include "magiclab/labeling.hpp"
#include "magiclab/partition.hpp"

using namespace magiclab;

namespace {

// Naive ground truth: assign each label to one of the k parts, respecting
// sizes and the target sum, with no pruning beyond capacity.
bool naive_feasible(const std::vector<int>& sizes) {
    int k = static_cast<int>(sizes.size());
    int n = std::accumulate(sizes.begin(), sizes.end(), 0);
    long long total = static_cast<long long>(n) * (n + 1) / 2;
    if (total % k != 0) return false;
    long long target = total / k;
    std::vector<int> left(sizes.begin(), sizes.end());
    std::vector<long long> need(k, target);
    auto rec = [&](auto&& self, int x) -> bool {
        if (x == 0) return true;
        for (int i = 0; i < k; ++i) {
            if (left[i] == 0 || need[i] < x) continue;
            --left[i];
            need[i] -= x;
            if (self(self, x - 1)) return true;
            ++left[i];
            need[i] += x;
        }
        return false;
    };
    return rec(rec, n);
}

bool valid_solution(const std::vector<int>& sizes, const PartitionResult& r) {
    if (!r.solved()) return false;
    int n = std::accumulate(sizes.begin(), sizes.end(), 0);
    int k = static_cast<int>(sizes.size());
    long long target = static_cast<long long>(n) * (n + 1) / 2 / k;
    std::vector<char> seen(n + 1, 0);
    for (int i = 0; i < k; ++i) {
        if (static_cast<int>(r.parts[i].size()) != sizes[i]) return false;
        long long s = 0;
        for (int x : r.parts[i]) {
            if (x < 1 || x > n || seen[x]) return false;
            seen[x] = 1;
            s += x;
        }
        if (s != target) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("necessary conditions") {
    auto i1 = PartitionInstance::from_sizes({3, 4, 4, 5});
    CHECK(necessary_mod(i1).pass);
    CHECK(necessary_prefix(i1).pass);
    CHECK(i1.target() == 34);

    auto i3 = PartitionInstance::from_sizes({2, 2, 3, 3});  // n=10, k=4
    CHECK_FALSE(necessary_mod(i3).pass);

    auto i4 = PartitionInstance::from_sizes({1, 2, 2, 2});  // n=7 = 2k-1 (mod 2k)
    CHECK(necessary_mod(i4).pass);

    auto i5 = PartitionInstance::from_sizes({2, 4, 4, 6});
    CHECK(necessary_mod(i5).pass);
    CHECK_FALSE(necessary_prefix(i5).pass);  // 15+16 = 31 < 34

    // necessary but not sufficient: singletons
    auto i6 = PartitionInstance::from_sizes({1, 1, 1});
    CHECK(necessary_prefix(i6).pass);
    CHECK(solve_partition({1, 1, 1}).status == PartitionResult::Status::exhausted);
}

TEST_CASE("solver on the worked instance") {
    PartitionResult r = solve_partition({3, 4, 4, 5});
    REQUIRE(r.solved());
    CHECK(valid_solution({3, 4, 4, 5}, r));

    // the published solution is itself valid
    PartitionResult paper;
    paper.status = PartitionResult::Status::solved;
    paper.parts = {{3, 15, 16}, {1, 6, 13, 14}, {2, 9, 11, 12}, {4, 5, 7, 8, 10}};
    CHECK(valid_solution({3, 4, 4, 5}, paper));

    PartitionResult bad = solve_partition({2, 4, 4, 6});
    CHECK(bad.status == PartitionResult::Status::infeasible_prefix);
    CHECK(bad.tag() == "prefix");

    // caller order is preserved even though the solver sorts internally
    PartitionResult r2 = solve_partition({5, 3, 4, 4});
    REQUIRE(r2.solved());
    CHECK(valid_solution({5, 3, 4, 4}, r2));
}

TEST_CASE("solver agrees with naive enumeration for n <= 12") {
    // all size multisets with k parts and n <= 12, k <= 4 (ascending sizes)
    for (int k = 1; k <= 4; ++k) {
        std::vector<int> sizes(k, 1);
        auto rec = [&](auto&& self, int idx, int minv, int left) -> void {
            if (idx == k) {
                std::vector<int> s(sizes.begin(), sizes.end());
                bool naive = naive_feasible(s);
                PartitionResult r = solve_partition(s);
                CHECK(r.solved() == naive);
                if (r.solved()) CHECK(valid_solution(s, r));
                return;
            }
            for (int v = minv; v <= left - (k - idx - 1) * minv && v <= left; ++v) {
                sizes[idx] = v;
                if (left - v >= (k - idx - 1) * v) self(self, idx + 1, v, left - v);
            }
        };
        for (int n = k; n <= 12; ++n) rec(rec, 0, 1, n);
    }
}

TEST_CASE("singleton instances") {
    CHECK(solve_partition({1}).solved());
    for (int n = 2; n <= 6; ++n)
        CHECK_FALSE(solve_partition(std::vector<int>(n, 1)).solved());
}

TEST_CASE("serialization") {
    CHECK(solve_partition({2, 4, 4, 6}).to_string() == "INFEASIBLE prefix\n");
    PartitionResult r = solve_partition({1, 2});  // n=3, k=2: 3 mod 4 = 3 = 2k-1
    REQUIRE(r.solved());
    CHECK(r.to_string() == "1: 3\n2: 1 2\n");
}

TEST_CASE("blow-up labelings") {
    Graph c4 = new_cycle(4);
    auto r = blow_up_labeling(c4, {3, 4, 4, 5});
    REQUIRE(r.feasible);
    Verdict v = verify_cdm(blow_up({c4, {3, 4, 4, 5}}), r.labeling);
    CHECK(v.magic);
    CHECK(v.constant == 102);

    // same partition over other 2-regular bases on 4 vertices
    for (const Graph& base : {new_complete(4), new_disjoint_copies(2, new_complete(2))}) {
        auto rb = blow_up_labeling(base, {3, 4, 4, 5});
        REQUIRE(rb.feasible);
        CHECK(verify_cdm(blow_up({base, {3, 4, 4, 5}}), rb.labeling).magic);
    }

    auto bad = blow_up_labeling(c4, {2, 4, 4, 6});
    CHECK_FALSE(bad.feasible);
    CHECK(bad.tag == "partition.prefix");

    CHECK_THROWS(blow_up_labeling(new_complete_bipartite(2, 3), {1, 1, 1, 1, 1}));
}
