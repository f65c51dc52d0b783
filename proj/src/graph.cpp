#include "magiclab/graph.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace magiclab {

Graph new_cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph new_complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph new_complete_bipartite(int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("K_{m,n} needs m,n >= 1");
    Graph g(m + n);
    for (int u = 0; u < m; ++u)
        for (int v = 0; v < n; ++v) g.add_edge(u, m + v);
    return g;
}

Graph new_disjoint_copies(int c, const Graph& base) {
    if (c < 1) throw std::invalid_argument("copy count must be >= 1");
    int m = base.n();
    Graph g(c * m);
    for (int t = 0; t < c; ++t)
        for (auto [u, v] : base.edges()) g.add_edge(t * m + u, t * m + v);
    return g;
}

Graph new_circulant(int n, const std::set<int>& steps) {
    if (n < 2) throw std::invalid_argument("circulant needs n >= 2");
    if (steps.empty()) throw std::invalid_argument("step set must be nonempty");
    for (int s : steps)
        if (s < 1 || s > n / 2)
            throw std::invalid_argument("circulant step out of range [1, n/2]");
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int s : steps) g.add_edge(i, (i + s) % n);
    return g;
}

Graph strong_product(const Graph& g, const Graph& h) {
    int ng = g.n(), nh = h.n();
    Graph out(ng * nh);
    for (int g1 = 0; g1 < ng; ++g1)
        for (int h1 = 0; h1 < nh; ++h1)
            for (int g2 = 0; g2 < ng; ++g2)
                for (int h2 = 0; h2 < nh; ++h2) {
                    if (g1 * nh + h1 >= g2 * nh + h2) continue;
                    bool ge = g1 == g2, ga = g.adjacent(g1, g2);
                    bool he = h1 == h2, ha = h.adjacent(h1, h2);
                    if ((ge && ha) || (ga && he) || (ga && ha))
                        out.add_edge(g1 * nh + h1, g2 * nh + h2);
                }
    return out;
}

Graph line_graph(const Graph& g) {
    auto es = g.edges();
    if (es.empty()) throw std::invalid_argument("line graph needs >= 1 edge");
    Graph out(static_cast<int>(es.size()));
    for (size_t a = 0; a < es.size(); ++a)
        for (size_t b = a + 1; b < es.size(); ++b) {
            auto [u1, v1] = es[a];
            auto [u2, v2] = es[b];
            if (u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2)
                out.add_edge(static_cast<int>(a), static_cast<int>(b));
        }
    return out;
}

Graph blow_up(const BlowUpSpec& spec) {
    const Graph& base = spec.base;
    if (!base.is_regular())
        throw std::invalid_argument("blow-up base must be regular");
    if (static_cast<int>(spec.sizes.size()) != base.n())
        throw std::invalid_argument("one block size per base vertex required");
    int total = 0;
    std::vector<int> offset(spec.sizes.size());
    for (size_t i = 0; i < spec.sizes.size(); ++i) {
        if (spec.sizes[i] < 1) throw std::invalid_argument("block sizes must be >= 1");
        offset[i] = total;
        total += spec.sizes[i];
    }
    Graph g(total);
    int k = base.n();
    for (int i = 0; i < k; ++i) {
        for (int a = 0; a < spec.sizes[i]; ++a)
            for (int b = a + 1; b < spec.sizes[i]; ++b)
                g.add_edge(offset[i] + a, offset[i] + b);
        for (int j = i + 1; j < k; ++j) {
            if (!base.adjacent(i, j)) continue;
            for (int a = 0; a < spec.sizes[i]; ++a)
                for (int b = 0; b < spec.sizes[j]; ++b)
                    g.add_edge(offset[i] + a, offset[j] + b);
        }
    }
    return g;
}

Graph read_edge_list(std::istream& in) {
    std::string line;
    int n = -1;
    std::vector<std::pair<int, int>> es;
    while (std::getline(in, line)) {
        size_t p = line.find_first_not_of(" \t\r");
        if (p == std::string::npos || line[p] == '#') continue;
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n) || n < 1) throw std::runtime_error("bad edge-list header");
            continue;
        }
        int u, v;
        if (!(ls >> u >> v)) throw std::runtime_error("bad edge-list line: " + line);
        es.emplace_back(u, v);
    }
    if (n < 0) throw std::runtime_error("empty edge-list input");
    Graph g(n);
    for (auto [u, v] : es) g.add_edge(u, v);
    return g;
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.n() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
}

}  // namespace magiclab
