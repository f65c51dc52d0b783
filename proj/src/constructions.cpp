#include "magiclab/constructions.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace magiclab {

bool MagicRectangle::valid() const {
    if (m < 1 || n < 1 || static_cast<int>(cells.size()) != m) return false;
    long long total = static_cast<long long>(m) * n;
    std::vector<char> seen(total + 1, 0);
    long long rowsum = n * (total + 1) / 2, colsum = m * (total + 1) / 2;
    if (n * (total + 1) % 2 != 0 || m * (total + 1) % 2 != 0) return false;
    for (const auto& row : cells) {
        if (static_cast<int>(row.size()) != n) return false;
        long long s = 0;
        for (int x : row) {
            if (x < 1 || x > total || seen[x]) return false;
            seen[x] = 1;
            s += x;
        }
        if (s != rowsum) return false;
    }
    for (int j = 0; j < n; ++j) {
        long long s = 0;
        for (int i = 0; i < m; ++i) s += cells[i][j];
        if (s != colsum) return false;
    }
    return true;
}

std::string MagicRectangle::to_string() const {
    std::ostringstream s;
    for (const auto& row : cells) {
        for (int j = 0; j < n; ++j) s << row[j] << (j + 1 == n ? "" : " ");
        s << "\n";
    }
    return s.str();
}

TriplePartition triples_partition(int m) {
    if (m < 3 || m % 6 != 3)
        throw std::invalid_argument("triples_partition needs m ≡ 3 (mod 6)");
    TriplePartition tp;
    tp.m = m;
    for (int i = 0; i <= (m - 3) / 6; ++i)
        tp.triples.push_back({2 * i + 1, (m + 1) / 2 - i, m - i});
    for (int i = 0; i <= (m - 9) / 6; ++i)
        tp.triples.push_back({2 * i + 2, 2 * m / 3 - i, (5 * m - 3) / 6 - i});
    return tp;
}

namespace {

// Deterministic PRNG for allocation tie-breaking; output is a pure
// function of the seed, so rectangle construction stays reproducible.
struct SplitMix64 {
    uint64_t state;
    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
};

enum class Strategy { snake, consec, rr, rnd };

// Deal pair indices 1..P to m rows, P/m each.
std::vector<std::vector<int>> deal_pairs(int P, int m, Strategy st, uint64_t seed) {
    std::vector<std::vector<int>> alloc(m);
    int per = P / m;
    if (st == Strategy::rnd) {
        std::vector<int> pairs(P);
        std::iota(pairs.begin(), pairs.end(), 1);
        SplitMix64 rng{seed};
        for (int i = P - 1; i > 0; --i)
            std::swap(pairs[i], pairs[rng.next() % static_cast<uint64_t>(i + 1)]);
        for (int i = 0; i < m; ++i)
            alloc[i].assign(pairs.begin() + static_cast<long>(i) * per,
                            pairs.begin() + static_cast<long>(i + 1) * per);
        return alloc;
    }
    for (int v = 1; v <= P; ++v) {
        if (st == Strategy::consec) {
            alloc[(v - 1) / per].push_back(v);
        } else if (st == Strategy::rr) {
            alloc[(v - 1) % m].push_back(v);
        } else {  // snake
            int b = (v - 1) / m, r = (v - 1) % m;
            alloc[b % 2 == 0 ? r : m - 1 - r].push_back(v);
        }
    }
    return alloc;
}

// Equal-sum value sets, one per row of a tall (m >= n) rectangle.
// Odd sizes: one middle-band triple plus complement pairs per row;
// even sizes: complement pairs only. Every row sums to n(mn+1)/2.
std::vector<std::vector<int>> build_rows(int m, int n, Strategy st, uint64_t seed) {
    int M = m * n;
    std::vector<std::vector<int>> rows(m);
    if (m % 2 == 1) {
        int q = 3 * m, shift = (M - q) / 2;
        TriplePartition tp = triples_partition(q);
        int P = (n - 3) / 2 * m;
        auto alloc = P > 0 ? deal_pairs(P, m, st, seed)
                           : std::vector<std::vector<int>>(m);
        for (int i = 0; i < m; ++i) {
            for (int x : tp.triples[i]) rows[i].push_back(x + shift);
            for (int v : alloc[i]) {
                rows[i].push_back(v);
                rows[i].push_back(M + 1 - v);
            }
        }
    } else {
        auto alloc = deal_pairs(M / 2, m, st, seed);
        for (int i = 0; i < m; ++i)
            for (int v : alloc[i]) {
                rows[i].push_back(v);
                rows[i].push_back(M + 1 - v);
            }
    }
    for (auto& r : rows) std::sort(r.begin(), r.end(), std::greater<int>());
    return rows;
}

// Column-by-column backtracking: pick one value per row for each column so
// every column hits m(mn+1)/2, with suffix min/max pruning and a node budget.
struct RectSolver {
    int m, n;
    long long colsum;
    long long nodes = 0, budget;
    bool out_of_budget = false;
    std::vector<std::vector<int>> rem;   // per-row remaining values, descending
    std::vector<std::vector<int>> grid;  // [m][n]

    bool place(int col) {
        if (col == n) return true;
        std::vector<long long> smin(m + 1, 0), smax(m + 1, 0);
        for (int i = m - 1; i >= 0; --i) {
            smin[i] = smin[i + 1] + rem[i].back();
            smax[i] = smax[i + 1] + rem[i].front();
        }
        return assign(col, 0, 0, smin, smax);
    }

    bool assign(int col, int i, long long acc, const std::vector<long long>& smin,
                const std::vector<long long>& smax) {
        if (++nodes > budget) {
            out_of_budget = true;
            return false;
        }
        if (i == m) return acc == colsum && place(col + 1);
        for (size_t idx = 0; idx < rem[i].size(); ++idx) {
            int v = rem[i][idx];
            long long na = acc + v;
            if (na + smin[i + 1] > colsum || na + smax[i + 1] < colsum) continue;
            grid[i][col] = v;
            rem[i].erase(rem[i].begin() + static_cast<long>(idx));
            if (assign(col, i + 1, na, smin, smax)) return true;
            rem[i].insert(rem[i].begin() + static_cast<long>(idx), v);
            if (out_of_budget) return false;
        }
        return false;
    }
};

std::optional<std::vector<std::vector<int>>> solve_tall(int m, int n) {
    struct Attempt { Strategy st; uint64_t seed; };
    std::vector<Attempt> attempts = {{Strategy::snake, 0}, {Strategy::consec, 0},
                                     {Strategy::rr, 0}};
    for (uint64_t s = 0; s < 8; ++s) attempts.push_back({Strategy::rnd, s});
    for (auto [st, seed] : attempts) {
        RectSolver solver;
        solver.m = m;
        solver.n = n;
        solver.colsum = static_cast<long long>(m) * (static_cast<long long>(m) * n + 1) / 2;
        solver.budget = 1'000'000;
        solver.rem = build_rows(m, n, st, seed);
        solver.grid.assign(m, std::vector<int>(n, 0));
        if (solver.place(0)) return solver.grid;
    }
    return std::nullopt;
}

}  // namespace

std::optional<MagicRectangle> magic_rectangle(int m, int n) {
    if (m <= 1 || n <= 1) throw std::invalid_argument("magic rectangle needs m,n > 1");
    if ((m - n) % 2 != 0 || (m == 2 && n == 2)) return std::nullopt;  // Harmuth
    int tall_m = std::max(m, n), tall_n = std::min(m, n);
    auto grid = solve_tall(tall_m, tall_n);
    if (!grid) throw std::runtime_error("magic rectangle construction failed");
    MagicRectangle rect;
    rect.m = m;
    rect.n = n;
    if (m >= n) {
        rect.cells = std::move(*grid);
    } else {
        rect.cells.assign(m, std::vector<int>(n, 0));
        for (int i = 0; i < tall_m; ++i)
            for (int j = 0; j < tall_n; ++j) rect.cells[j][i] = (*grid)[i][j];
    }
    if (!rect.valid()) throw std::logic_error("magic rectangle invariant violated");
    return rect;
}

Labeling label_complete_strong(int n_k, const Graph& g) {
    if (n_k < 2) throw std::invalid_argument("K_n factor needs n >= 2");
    auto r = g.is_regular();
    if (!r || *r < 1) throw std::invalid_argument("second factor must be r-regular, r > 0");
    int m = g.n();
    int total = n_k * m;
    Labeling l;
    l.values.assign(total, 0);
    if (n_k % 2 == 0) {
        // each fiber over a G-vertex receives h small and h large labels
        int h = n_k / 2;
        for (int j = 0; j < m; ++j)
            for (int i = 0; i < n_k; ++i)
                l.values[i * m + j] =
                    i < h ? j * h + i + 1 : total - j * h - (i - h);
    } else {
        if (m % 2 == 0)
            throw std::invalid_argument(
                "odd K_n with even |G| not covered (no magic rectangle)");
        auto rect = magic_rectangle(n_k, m);
        for (int i = 0; i < n_k; ++i)
            for (int j = 0; j < m; ++j) l.values[i * m + j] = rect->cells[i][j];
    }
    return l;
}

Labeling label_cycle_strong_cycle(int m, int n) {
    if (m % 6 != 3 || n % 6 != 3)
        throw std::invalid_argument("both dimensions must be ≡ 3 (mod 6)");
    TriplePartition S = triples_partition(m), T = triples_partition(n);
    Labeling l;
    l.values.assign(static_cast<size_t>(m) * n, 0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) {
            int l1 = S.triples[i / 3][j % 3];
            int l2 = T.triples[j / 3][i % 3];
            l.values[static_cast<size_t>(i) * n + j] = (l1 - 1) * n + l2;
        }
    return l;
}

Feasibility cdm_cycle_strong_cycle_iff(int m, int n) {
    if (m < 3 || n < 3) throw std::invalid_argument("cycles need length >= 3");
    if (m % 6 == 3 && n % 6 == 3) return {true, "thm5.cond1"};
    if ((m == 3 && n % 2 == 1) || (n == 3 && m % 2 == 1)) return {true, "thm5.cond2"};
    return {false, "thm5.infeasible"};
}

LabelingResult label_cycle_strong_cycle_any(int m, int n) {
    LabelingResult out;
    Feasibility f = cdm_cycle_strong_cycle_iff(m, n);
    out.feasible = f.feasible;
    out.tag = f.tag;
    if (!f.feasible) return out;
    if (m % 6 == 3 && n % 6 == 3) {
        out.labeling = label_cycle_strong_cycle(m, n);
    } else if (m == 3) {
        // C_3 ≅ K_3; same vertex indexing as strong_product(C_3, C_n)
        out.labeling = label_complete_strong(3, new_cycle(n));
    } else {
        // C_m ⊠ C_3: fibers over C_m vertices are K_3 fibers; rectangle rows
        auto rect = magic_rectangle(m, 3);
        out.labeling.values.assign(static_cast<size_t>(m) * 3, 0);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < 3; ++j)
                out.labeling.values[static_cast<size_t>(i) * 3 + j] = rect->cells[i][j];
    }
    return out;
}

LabelingResult label_circulant(int n, int c, int k) {
    if (c < 1 || k < 1) throw std::invalid_argument("circulant needs c,k >= 1");
    if (k * c > n / 2 && n != 2 * k * c)
        throw std::invalid_argument("step kc exceeds n/2");
    LabelingResult out;
    if (n == 2 * k * c) {
        out.feasible = true;
        out.tag = "lemSyl2";
        out.labeling.values.assign(n, 0);
        for (int i = 0; i < k * c; ++i) {
            out.labeling.values[i] = i + 1;
            out.labeling.values[k * c + i] = n - i;
        }
        return out;
    }
    if (n == (2 * k + 1) * c) {
        if (c % 2 == 0) {
            out.tag = "lemSyl3.parity";
            return out;
        }
        out.feasible = true;
        out.tag = "lemSyl3";
        out.labeling.values.assign(n, 0);
        if (c == 1) {  // Ci(2k+1,{1..k}) = K_{2k+1}: any bijection works
            for (int i = 0; i < n; ++i) out.labeling.values[i] = i + 1;
            return out;
        }
        auto rect = magic_rectangle(2 * k + 1, c);
        for (int i = 0; i <= 2 * k; ++i)
            for (int j = 0; j < c; ++j)
                out.labeling.values[static_cast<size_t>(i) * c + j] = rect->cells[i][j];
        return out;
    }
    out.tag = "lemSyl1";
    return out;
}

LabelingResult label_disjoint_complete(int c, int n) {
    if (c < 1 || n < 2) throw std::invalid_argument("cK_n needs c >= 1, n >= 2");
    LabelingResult out;
    if (n * (c + 1) % 2 != 0) {
        out.tag = "ckn.parity";
        return out;
    }
    int total = c * n;
    out.feasible = true;
    out.labeling.values.assign(total, 0);
    if (n % 2 == 0) {
        out.tag = "ckn.pairing";
        int h = n / 2;
        for (int i = 0; i < c; ++i)
            for (int s = 0; s < h; ++s) {
                int p = i * h + s + 1;  // pair (p, cn+1-p)
                out.labeling.values[i * n + 2 * s] = p;
                out.labeling.values[i * n + 2 * s + 1] = total + 1 - p;
            }
    } else if (c == 1) {  // a single K_n: any bijection works
        out.tag = "ckn.single";
        for (int i = 0; i < n; ++i) out.labeling.values[i] = i + 1;
    } else {
        out.tag = "ckn.rectangle";
        auto rect = magic_rectangle(c, n);
        for (int i = 0; i < c; ++i)
            for (int j = 0; j < n; ++j)
                out.labeling.values[static_cast<size_t>(i) * n + j] = rect->cells[i][j];
    }
    return out;
}

Feasibility ci_prop3(int n, int k) {
    if (k < 1 || k > n / 2)
        throw std::invalid_argument("prop3 needs 1 <= k <= n/2");
    if (n == 4 * k) return {true, "prop3.n-eq-4k"};
    return {false, "prop3.n-ne-4k"};
}

Feasibility ci_prop4(int n, int k) {
    if (k < 1 || n < 2 * k + 2)
        throw std::invalid_argument("prop4 needs n >= 2k+2");
    return {false, "prop4.not-cdm"};
}

}  // namespace magiclab
