#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "magiclab/graph.hpp"
#include "magiclab/labeling.hpp"

namespace magiclab {

struct MagicRectangle {
    int m = 0, n = 0;
    std::vector<std::vector<int>> cells;  // m rows of n entries, permutation of 1..mn

    bool valid() const;
    std::string to_string() const;  // m lines of n integers
};

struct TriplePartition {
    int m = 0;  // m ≡ 3 (mod 6)
    std::vector<std::array<int, 3>> triples;  // each sums to 3(m+1)/2
};

struct Feasibility {
    bool feasible = false;
    std::string tag;
};

// Labeling together with the theorem tag that produced it (or the
// infeasibility tag when no construction exists).
struct LabelingResult {
    bool feasible = false;
    std::string tag;
    Labeling labeling;  // valid only when feasible
};

// Harmuth: a magic (m,n)-rectangle exists iff m ≡ n (mod 2) and (m,n) ≠ (2,2).
// Requires m,n > 1; returns nullopt exactly on Harmuth-excluded pairs.
std::optional<MagicRectangle> magic_rectangle(int m, int n);

TriplePartition triples_partition(int m);

// K_{n_k} ⊠ G for regular G: even n_k (pairing branch) or odd n_k with odd |G|
// (magic-rectangle branch). Vertex (i,j) of K⊠G is indexed i*G.n + j.
Labeling label_complete_strong(int n_k, const Graph& g);

// C_m ⊠ C_n for m ≡ n ≡ 3 (mod 6); vertex (i,j) indexed i*n + j.
Labeling label_cycle_strong_cycle(int m, int n);

Feasibility cdm_cycle_strong_cycle_iff(int m, int n);

// Dispatches on cdm_cycle_strong_cycle_iff; constructs when feasible.
LabelingResult label_cycle_strong_cycle_any(int m, int n);

// Ci(n, {c,2c,...,kc}): CDM iff n=2kc, or n=(2k+1)c with c odd (Theorem 6).
LabelingResult label_circulant(int n, int c, int k);

// cK_n: CDM iff n(c+1) even.
LabelingResult label_disjoint_complete(int c, int n);

// Simanjuntak predicates (no constructions in scope).
Feasibility ci_prop3(int n, int k);  // Ci(n,{1..⌊n/2⌋}\{k}) CDM iff n = 4k
Feasibility ci_prop4(int n, int k);  // Ci(n,{1..k}), n >= 2k+2: never CDM

}  // namespace magiclab
