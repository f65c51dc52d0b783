#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "magiclab/graph.hpp"
#include "magiclab/labeling.hpp"

namespace magiclab {

struct SearchBudget {
    int max_vertices = 11;
    int max_cells = 16;
    std::optional<uint64_t> node_limit;
};

enum class SearchOutcome { found, exhausted_negative, budget_exceeded };

std::string outcome_to_string(SearchOutcome o);

struct SearchResult {
    SearchOutcome outcome = SearchOutcome::budget_exceeded;
    Labeling labeling;  // valid only when outcome == found
};

// Exhaustive CDM search. Regular graphs use Observation 1's single k'
// candidate; irregular graphs scan every consistent k'. An
// exhausted-negative is a proof of non-CDM-ness.
SearchResult brute_force_cdm(const Graph& g, const SearchBudget& budget = {});

// Exhaustive magic-rectangle existence (independent of Harmuth's theorem).
SearchOutcome brute_force_magic_rectangle(int m, int n, const SearchBudget& budget = {});

// First labeling (lexicographic in vertex order) with pairwise-distinct
// open-neighborhood sums, or exhaustive negative.
SearchResult brute_force_distance_antimagic(const Graph& g,
                                            const SearchBudget& budget = {});

}  // namespace magiclab
