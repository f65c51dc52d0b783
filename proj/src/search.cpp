#include "magiclab/search.hpp"

#include <algorithm>
#include <climits>
#include <numeric>
#include <set>
#include <vector>

namespace magiclab {

std::string outcome_to_string(SearchOutcome o) {
    switch (o) {
        case SearchOutcome::found: return "FOUND";
        case SearchOutcome::exhausted_negative: return "EXHAUSTED-NEGATIVE";
        default: return "BUDGET-EXCEEDED";
    }
}

namespace {

struct CdmSearcher {
    const Graph& g;
    long long k_prime;
    bool regular;
    uint64_t nodes = 0, node_limit;
    bool out_of_budget = false;
    int n;
    std::vector<int> label_of;            // label assigned to vertex, 0 = none
    std::vector<char> used;               // labels in use
    std::vector<long long> partial;       // partial N[x] sums
    std::vector<int> open;                // unlabeled count in N[x]
    std::vector<std::vector<int>> nbhd;   // closed neighborhoods

    CdmSearcher(const Graph& graph, long long k, bool reg, uint64_t limit)
        : g(graph), k_prime(k), regular(reg), node_limit(limit), n(graph.n()) {
        label_of.assign(n, 0);
        used.assign(n + 1, 0);
        partial.assign(n, 0);
        open.assign(n, 0);
        nbhd.resize(n);
        for (int v = 0; v < n; ++v) {
            nbhd[v] = g.closed_neighborhood(v);
            open[v] = static_cast<int>(nbhd[v].size());
        }
    }

    bool feasible_after(int v) {
        for (int x : nbhd[v]) {
            if (open[x] == 0) {
                if (partial[x] != k_prime) return false;
                continue;
            }
            // crude bounds: open[x] labels still to come, each in [1, n]
            if (partial[x] + open[x] > k_prime) return false;
            if (partial[x] + static_cast<long long>(open[x]) * n < k_prime) return false;
        }
        return true;
    }

    bool search(int v) {
        if (++nodes > node_limit) {
            out_of_budget = true;
            return false;
        }
        if (v == n) return true;
        // label-complement symmetry: for regular graphs ℓ ↦ n+1−ℓ preserves
        // CDM-ness, so the first vertex may take only the lower half
        int hi = (regular && v == 0) ? (n + 1) / 2 : n;
        for (int lab = 1; lab <= hi; ++lab) {
            if (used[lab]) continue;
            used[lab] = 1;
            label_of[v] = lab;
            for (int x : nbhd[v]) {
                partial[x] += lab;
                --open[x];
            }
            if (feasible_after(v) && search(v + 1)) return true;
            for (int x : nbhd[v]) {
                partial[x] -= lab;
                ++open[x];
            }
            used[lab] = 0;
            label_of[v] = 0;
            if (out_of_budget) return false;
        }
        return false;
    }
};

}  // namespace

SearchResult brute_force_cdm(const Graph& g, const SearchBudget& budget) {
    SearchResult out;
    if (g.n() > budget.max_vertices) {
        out.outcome = SearchOutcome::budget_exceeded;
        return out;
    }
    uint64_t limit = budget.node_limit.value_or(UINT64_MAX);
    int n = g.n();

    std::vector<long long> candidates;
    auto r = g.is_regular();
    if (r) {
        long long prod = (static_cast<long long>(*r) + 1) * (n + 1);
        if (prod % 2 != 0) {  // Observation 1 rules out every k'
            out.outcome = SearchOutcome::exhausted_negative;
            return out;
        }
        candidates.push_back(prod / 2);
    } else {
        long long lo = LLONG_MAX, hi = 0;
        for (int v = 0; v < n; ++v) {
            long long d = static_cast<long long>(g.closed_neighborhood(v).size());
            lo = std::min(lo, d * (d + 1) / 2);
            hi = std::max(hi, d * (2 * n - d + 1) / 2);
        }
        for (long long k = lo; k <= hi; ++k) candidates.push_back(k);
    }

    for (long long k : candidates) {
        CdmSearcher s(g, k, static_cast<bool>(r), limit);
        if (s.search(0)) {
            out.outcome = SearchOutcome::found;
            out.labeling.values = s.label_of;
            return out;
        }
        if (s.out_of_budget) {
            out.outcome = SearchOutcome::budget_exceeded;
            return out;
        }
    }
    out.outcome = SearchOutcome::exhausted_negative;
    return out;
}

namespace {

struct RectSearcher {
    int m, n, total;
    long long rowsum, colsum;
    uint64_t nodes = 0, node_limit;
    bool out_of_budget = false;
    std::vector<char> used;
    std::vector<long long> rowpart, colpart;

    bool search(int cell) {
        if (++nodes > node_limit) {
            out_of_budget = true;
            return false;
        }
        if (cell == total) return true;
        int i = cell / n, j = cell % n;
        for (int v = 1; v <= total; ++v) {
            if (used[v]) continue;
            long long rp = rowpart[i] + v, cp = colpart[j] + v;
            int row_left = n - j - 1, col_left = m - i - 1;
            if (rp > rowsum || cp > colsum) continue;
            if (row_left == 0 && rp != rowsum) continue;
            if (col_left == 0 && cp != colsum) continue;
            // remaining slots must be able to close the sums with values <= total
            if (rp + static_cast<long long>(row_left) * total < rowsum) continue;
            if (cp + static_cast<long long>(col_left) * total < colsum) continue;
            used[v] = 1;
            rowpart[i] = rp;
            colpart[j] = cp;
            if (search(cell + 1)) return true;
            used[v] = 0;
            rowpart[i] = rp - v;
            colpart[j] = cp - v;
            if (out_of_budget) return false;
        }
        return false;
    }
};

}  // namespace

SearchOutcome brute_force_magic_rectangle(int m, int n, const SearchBudget& budget) {
    if (m * n > budget.max_cells) return SearchOutcome::budget_exceeded;
    long long total = static_cast<long long>(m) * n;
    // row/column sums must be integers at all
    if (n * (total + 1) % 2 != 0 || m * (total + 1) % 2 != 0)
        return SearchOutcome::exhausted_negative;
    RectSearcher s;
    s.m = m;
    s.n = n;
    s.total = static_cast<int>(total);
    s.rowsum = n * (total + 1) / 2;
    s.colsum = m * (total + 1) / 2;
    s.node_limit = budget.node_limit.value_or(UINT64_MAX);
    s.used.assign(total + 1, 0);
    s.rowpart.assign(m, 0);
    s.colpart.assign(n, 0);
    if (s.search(0)) return SearchOutcome::found;
    return s.out_of_budget ? SearchOutcome::budget_exceeded
                           : SearchOutcome::exhausted_negative;
}

namespace {

struct AntimagicSearcher {
    const Graph& g;
    int n;
    uint64_t nodes = 0, node_limit;
    bool out_of_budget = false;
    std::vector<int> label_of;
    std::vector<char> used;
    std::vector<long long> partial;
    std::vector<int> open;

    explicit AntimagicSearcher(const Graph& graph, uint64_t limit)
        : g(graph), n(graph.n()), node_limit(limit) {
        label_of.assign(n, 0);
        used.assign(n + 1, 0);
        partial.assign(n, 0);
        open.assign(n, 0);
        for (int v = 0; v < n; ++v) open[v] = g.degree(v);
    }

    bool distinct_so_far() {
        std::set<long long> done;
        for (int x = 0; x < n; ++x)
            if (open[x] == 0 && !done.insert(partial[x]).second) return false;
        return true;
    }

    bool search(int v) {
        if (++nodes > node_limit) {
            out_of_budget = true;
            return false;
        }
        if (v == n) return distinct_so_far();
        for (int lab = 1; lab <= n; ++lab) {
            if (used[lab]) continue;
            used[lab] = 1;
            label_of[v] = lab;
            for (int x : g.neighbors(v)) {
                partial[x] += lab;
                --open[x];
            }
            if (distinct_so_far() && search(v + 1)) return true;
            for (int x : g.neighbors(v)) {
                partial[x] -= lab;
                ++open[x];
            }
            used[lab] = 0;
            label_of[v] = 0;
            if (out_of_budget) return false;
        }
        return false;
    }
};

}  // namespace

SearchResult brute_force_distance_antimagic(const Graph& g, const SearchBudget& budget) {
    SearchResult out;
    if (g.n() > budget.max_vertices) {
        out.outcome = SearchOutcome::budget_exceeded;
        return out;
    }
    AntimagicSearcher s(g, budget.node_limit.value_or(UINT64_MAX));
    if (s.search(0)) {
        out.outcome = SearchOutcome::found;
        out.labeling.values = s.label_of;
    } else {
        out.outcome = s.out_of_budget ? SearchOutcome::budget_exceeded
                                      : SearchOutcome::exhausted_negative;
    }
    return out;
}

}  // namespace magiclab
