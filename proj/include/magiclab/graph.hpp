#pragma once

#include <iosfwd>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace magiclab {

// Undirected simple graph, dense adjacency. Immutable after construction.
class Graph {
public:
    explicit Graph(int n) : n_(n), adj_(static_cast<size_t>(n) * n, 0) {
        if (n < 1) throw std::invalid_argument("graph order must be >= 1");
    }

    int n() const { return n_; }

    bool adjacent(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return adj_[static_cast<size_t>(u) * n_ + v] != 0;
    }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("self-loops not allowed");
        adj_[static_cast<size_t>(u) * n_ + v] = 1;
        adj_[static_cast<size_t>(v) * n_ + u] = 1;
    }

    std::vector<int> neighbors(int v) const {
        check_vertex(v);
        std::vector<int> out;
        for (int u = 0; u < n_; ++u)
            if (adj_[static_cast<size_t>(v) * n_ + u]) out.push_back(u);
        return out;
    }

    // N[v] = N(v) ∪ {v}, in increasing vertex order.
    std::vector<int> closed_neighborhood(int v) const {
        check_vertex(v);
        std::vector<int> out;
        for (int u = 0; u < n_; ++u)
            if (u == v || adj_[static_cast<size_t>(v) * n_ + u]) out.push_back(u);
        return out;
    }

    int degree(int v) const {
        check_vertex(v);
        int d = 0;
        for (int u = 0; u < n_; ++u) d += adj_[static_cast<size_t>(v) * n_ + u];
        return d;
    }

    std::optional<int> is_regular() const {
        int d = degree(0);
        for (int v = 1; v < n_; ++v)
            if (degree(v) != d) return std::nullopt;
        return d;
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v)
                if (adj_[static_cast<size_t>(u) * n_ + v]) out.emplace_back(u, v);
        return out;
    }

    size_t edge_count() const { return edges().size(); }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("vertex index out of range");
    }

    int n_;
    std::vector<char> adj_;
};

struct BlowUpSpec {
    Graph base;
    std::vector<int> sizes;  // one per base vertex, each >= 1
};

Graph new_cycle(int n);
Graph new_complete(int n);
Graph new_complete_bipartite(int m, int n);
Graph new_disjoint_copies(int c, const Graph& g);
Graph new_circulant(int n, const std::set<int>& steps);
Graph strong_product(const Graph& g, const Graph& h);
Graph line_graph(const Graph& g);
Graph blow_up(const BlowUpSpec& spec);

// Edge-list text format: first line "n", then lines "u v" (0 <= u < v < n).
// Blank lines and lines starting with '#' are ignored.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace magiclab
