#include "magiclab/labeling.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace magiclab {

bool Labeling::is_bijection() const {
    int n = static_cast<int>(values.size());
    std::vector<char> seen(n + 1, 0);
    for (int x : values) {
        if (x < 1 || x > n || seen[x]) return false;
        seen[x] = 1;
    }
    return true;
}

long long weight(const Graph& g, const Labeling& l, int v) {
    if (static_cast<int>(l.values.size()) != g.n())
        throw std::invalid_argument("labeling length does not match graph order");
    long long w = 0;
    for (int u : g.closed_neighborhood(v)) w += l.values[u];
    return w;
}

Verdict verify_cdm(const Graph& g, const Labeling& l) {
    Verdict out;
    if (static_cast<int>(l.values.size()) != g.n() || !l.is_bijection()) {
        out.bijective = false;
        return out;
    }
    long long k = weight(g, l, 0);
    for (int v = 1; v < g.n(); ++v) {
        long long w = weight(g, l, v);
        if (w != k) {
            // report the first violating pair in vertex order
            out.v = 0;
            out.wv = k;
            out.u = v;
            out.wu = w;
            return out;
        }
    }
    out.magic = true;
    out.constant = k;
    return out;
}

RegularConstant regular_magic_constant(const Graph& g) {
    RegularConstant out;
    auto r = g.is_regular();
    if (!r) return out;
    long long prod = (static_cast<long long>(*r) + 1) * (g.n() + 1);
    if (prod % 2 != 0) {
        out.state = RegularConstant::State::refuted;
        return out;
    }
    out.state = RegularConstant::State::value;
    out.k_prime = prod / 2;
    return out;
}

bool verify_distance_antimagic(const Graph& g, const Labeling& l) {
    if (static_cast<int>(l.values.size()) != g.n() || !l.is_bijection()) return false;
    std::set<long long> sums;
    for (int v = 0; v < g.n(); ++v) {
        long long w = 0;
        for (int u : g.neighbors(v)) w += l.values[u];
        if (!sums.insert(w).second) return false;
    }
    return true;
}

std::string Verdict::to_string() const {
    if (magic) return "MAGIC k'=" + std::to_string(*constant);
    if (!bijective) return "NOT-MAGIC not-a-bijection";
    std::ostringstream s;
    s << "NOT-MAGIC v=" << v << " w=" << wv << " u=" << u << " w=" << wu;
    return s.str();
}

Labeling read_labeling(std::istream& in) {
    int n;
    if (!(in >> n) || n < 1) throw std::runtime_error("bad labeling header");
    Labeling l;
    l.values.resize(n);
    for (int i = 0; i < n; ++i)
        if (!(in >> l.values[i])) throw std::runtime_error("labeling truncated");
    return l;
}

void write_labeling(std::ostream& out, const Labeling& l) {
    out << l.values.size() << "\n";
    for (size_t i = 0; i < l.values.size(); ++i)
        out << l.values[i] << (i + 1 == l.values.size() ? "\n" : " ");
}

}  // namespace magiclab
