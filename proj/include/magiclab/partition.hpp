#pragma once

#include <string>
#include <vector>

#include "magiclab/constructions.hpp"
#include "magiclab/graph.hpp"
#include "magiclab/labeling.hpp"
#include "magiclab/spectral.hpp"

namespace magiclab {

struct PartitionInstance {
    std::vector<int> sizes;  // part sizes, sorted non-decreasing internally
    int n = 0;               // sum of sizes
    int k = 0;               // number of parts

    static PartitionInstance from_sizes(std::vector<int> sizes);
    // target part sum binom(n+1,2)/k; meaningful only when necessary_mod passes
    long long target() const;
};

struct PartitionResult {
    enum class Status { solved, infeasible_mod, infeasible_prefix, exhausted };
    Status status = Status::exhausted;
    // parts[i] corresponds to the i-th size in the *caller's* original order
    std::vector<std::vector<int>> parts;

    bool solved() const { return status == Status::solved; }
    std::string tag() const;        // mod / prefix / exhausted
    std::string to_string() const;  // "size: members..." lines or INFEASIBLE
};

CheckResult necessary_mod(const PartitionInstance& inst);
CheckResult necessary_prefix(const PartitionInstance& inst);

// Exact backtracking with descending-label assignment, sum bounds, and
// symmetry breaking among equal-size parts. Cap on n (default 64).
PartitionResult solve_partition(const std::vector<int>& sizes, int cap = 64);

struct BlowUpLabelingResult {
    bool feasible = false;
    std::string tag;
    Labeling labeling;
};

BlowUpLabelingResult blow_up_labeling(const Graph& base, const std::vector<int>& sizes);

}  // namespace magiclab
