#include "magiclab/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace magiclab {

namespace {

double effective_tol(const std::vector<double>& eig, double tol) {
    double rad = 0;
    for (double x : eig) rad = std::max(rad, std::fabs(x));
    return tol * std::max(1.0, rad);
}

std::vector<std::pair<double, int>> cluster(const std::vector<double>& sorted_eig,
                                            double tol) {
    std::vector<std::pair<double, int>> out;
    double eff = effective_tol(sorted_eig, tol);
    size_t i = 0;
    while (i < sorted_eig.size()) {
        size_t j = i + 1;
        double sum = sorted_eig[i];
        while (j < sorted_eig.size() && sorted_eig[j] - sorted_eig[j - 1] <= eff) {
            sum += sorted_eig[j];
            ++j;
        }
        out.emplace_back(sum / static_cast<double>(j - i), static_cast<int>(j - i));
        i = j;
    }
    return out;
}

}  // namespace

Spectrum make_spectrum(std::vector<double> eigenvalues, double tol) {
    std::sort(eigenvalues.begin(), eigenvalues.end());
    Spectrum sp;
    sp.tol = tol;
    sp.clusters = cluster(eigenvalues, tol);
    sp.eigenvalues = std::move(eigenvalues);
    return sp;
}

Spectrum eigenvalues_symmetric(const Graph& g, double tol, int cap) {
    int n = g.n();
    if (n > cap) throw std::invalid_argument("graph exceeds eigensolver cap");
    std::vector<double> a(static_cast<size_t>(n) * n, 0.0);
    for (auto [u, v] : g.edges()) {
        a[static_cast<size_t>(u) * n + v] = 1.0;
        a[static_cast<size_t>(v) * n + u] = 1.0;
    }
    auto at = [&](int i, int j) -> double& { return a[static_cast<size_t>(i) * n + j]; };

    double norm = 0;
    for (double x : a) norm += x * x;
    norm = std::sqrt(norm);
    const double target = 1e-12 * std::max(norm, 1e-300);

    auto offdiag = [&]() {
        double s = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) s += 2 * at(i, j) * at(i, j);
        return std::sqrt(s);
    };

    const int max_sweeps = 100;
    int sweep = 0;
    while (offdiag() > target) {
        if (++sweep > max_sweeps)
            throw std::runtime_error("Jacobi eigensolver failed to converge");
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                double apq = at(p, q);
                if (apq == 0.0) continue;
                double theta = (at(q, q) - at(p, p)) / (2 * apq);
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::fabs(theta) + std::sqrt(theta * theta + 1));
                double c = 1 / std::sqrt(t * t + 1), s = t * c;
                for (int i = 0; i < n; ++i) {
                    double aip = at(i, p), aiq = at(i, q);
                    at(i, p) = c * aip - s * aiq;
                    at(i, q) = s * aip + c * aiq;
                }
                for (int i = 0; i < n; ++i) {
                    double api = at(p, i), aqi = at(q, i);
                    at(p, i) = c * api - s * aqi;
                    at(q, i) = s * api + c * aqi;
                }
            }
    }
    std::vector<double> eig(n);
    for (int i = 0; i < n; ++i) eig[i] = at(i, i);
    return make_spectrum(std::move(eig), tol);
}

Spectrum cycle_spectrum(int n, double tol) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    std::vector<double> eig(n);
    for (int j = 1; j <= n; ++j)
        eig[j - 1] = 2 * std::cos(2 * std::numbers::pi * j / n);
    return make_spectrum(std::move(eig), tol);
}

Spectrum complete_spectrum(int n, double tol) {
    std::vector<double> eig(n, -1.0);
    eig[n - 1] = n - 1.0;
    return make_spectrum(std::move(eig), tol);
}

Spectrum complete_bipartite_spectrum(int m, int n, double tol) {
    std::vector<double> eig(m + n, 0.0);
    eig[0] = -std::sqrt(static_cast<double>(m) * n);
    eig[m + n - 1] = std::sqrt(static_cast<double>(m) * n);
    return make_spectrum(std::move(eig), tol);
}

Spectrum circulant_spectrum(int n, const std::set<int>& steps, double tol) {
    for (int s : steps)
        if (s < 1 || s > n / 2) throw std::invalid_argument("circulant step out of range");
    std::vector<double> eig(n);
    for (int j = 0; j < n; ++j) {
        double v = 0;
        for (int s : steps) {
            double term = std::cos(2 * std::numbers::pi * j * s / n);
            // step n/2 contributes a single neighbor, not two
            v += (2 * s == n) ? term : 2 * term;
        }
        eig[j] = v;
    }
    return make_spectrum(std::move(eig), tol);
}

Spectrum strong_product_spectrum(const Spectrum& a, const Spectrum& b, double tol) {
    std::vector<double> eig;
    eig.reserve(a.eigenvalues.size() * b.eigenvalues.size());
    for (double x : a.eigenvalues)
        for (double y : b.eigenvalues) eig.push_back((x + 1) * (y + 1) - 1);
    return make_spectrum(std::move(eig), tol);
}

int multiplicity_of_minus_one(const Spectrum& sp) {
    double eff = effective_tol(sp.eigenvalues, sp.tol);
    for (auto [rep, mult] : sp.clusters)
        if (std::fabs(rep + 1.0) <= eff) return mult;
    return 0;
}

CheckResult necessary_regular_cdm(const Graph& g, double tol) {
    if (!g.is_regular())
        throw std::invalid_argument("necessary_regular_cdm requires a regular graph");
    Spectrum sp = eigenvalues_symmetric(g, tol);
    if (multiplicity_of_minus_one(sp) > 0) return {true, "cor2.minus-one-present"};
    return {false, "cor2.minus-one-absent"};
}

CheckResult necessary_line_graph(const Graph& g, double tol) {
    auto r = g.is_regular();
    if (!r || *r <= 1)
        throw std::invalid_argument("necessary_line_graph requires r-regular, r > 1");
    Spectrum sp = eigenvalues_symmetric(g, tol);
    double eff = effective_tol(sp.eigenvalues, sp.tol);
    double want = 1.0 - *r;
    for (auto [rep, mult] : sp.clusters)
        if (std::fabs(rep - want) <= eff) return {true, "cor6.one-minus-r-present"};
    return {false, "cor6.one-minus-r-absent"};
}

std::optional<SrgParams> detect_strongly_regular(const Graph& g) {
    auto r = g.is_regular();
    if (!r) return std::nullopt;
    int n = g.n();
    int a = -1, b = -1;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            int common = 0;
            for (int w = 0; w < n; ++w)
                if (g.adjacent(u, w) && g.adjacent(v, w)) ++common;
            if (g.adjacent(u, v)) {
                if (a < 0) a = common;
                else if (a != common) return std::nullopt;
            } else {
                if (b < 0) b = common;
                else if (b != common) return std::nullopt;
            }
        }
    if (a < 0) return std::nullopt;       // edgeless cases fall out earlier anyway
    if (b == 0) return std::nullopt;      // disconnected pairs: b >= 1 required
    if (b < 0) b = 0;                     // complete graph: no non-adjacent pairs
    return SrgParams{*r, a, b};
}

CheckResult strongly_regular_cdm_test(const Graph& g) {
    auto p = detect_strongly_regular(g);
    if (!p) throw std::invalid_argument("graph is not strongly regular");
    if (p->a == p->r - 1) return {true, "srg.a-equals-r-minus-1"};
    return {false, "srg.a-not-r-minus-1"};
}

CiGapMultiplicity ci_gap_multiplicity(int n, int k) {
    // The formula only holds for k <= (n-3)/2; e.g. at (n,k)=(6,2) it would
    // report 2 while Ci(6,{1,3}) has no eigenvalue -1 at all.
    if (k <= 1 || k > (n - 3) / 2)
        throw std::invalid_argument("ci_gap_multiplicity needs 1 < k <= (n-3)/2");
    CiGapMultiplicity out;
    int hits = 0;
    for (int t = 1; t <= k; ++t)
        if (static_cast<long long>(n) * t % (2 * k + 1) == 0) ++hits;
    out.m1 = 2 * hits;
    out.m2 = (n % 6 == 0) ? 2 : 0;
    out.m = out.m1 + out.m2;
    return out;
}

std::vector<double> cos_sum_root_check(int k, int variant) {
    if (variant != 1 && variant != 2) throw std::invalid_argument("variant must be 1 or 2");
    if ((variant == 1 && k < 1) || (variant == 2 && k < 2))
        throw std::invalid_argument("k out of range for variant");
    std::vector<double> roots;
    for (int j = 1; j <= k; ++j) {
        double x = 2.0 * j * std::numbers::pi / (2 * k + 1);
        roots.push_back(x);
        roots.push_back(-x);
    }
    if (variant == 2) {
        roots.push_back(std::numbers::pi / 3);
        roots.push_back(-std::numbers::pi / 3);
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

namespace {

bool code_search(const Graph& g, std::vector<char>& covered, std::vector<int>& code) {
    int n = g.n();
    int u = -1;
    for (int v = 0; v < n; ++v)
        if (!covered[v]) { u = v; break; }
    if (u < 0) return true;
    for (int v : g.closed_neighborhood(u)) {
        auto nb = g.closed_neighborhood(v);
        bool free = true;
        for (int w : nb)
            if (covered[w]) { free = false; break; }
        if (!free) continue;
        for (int w : nb) covered[w] = 1;
        code.push_back(v);
        if (code_search(g, covered, code)) return true;
        code.pop_back();
        for (int w : nb) covered[w] = 0;
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> find_perfect_code(const Graph& g) {
    if (g.n() > 64) throw std::invalid_argument("find_perfect_code cap is 64 vertices");
    std::vector<char> covered(g.n(), 0);
    std::vector<int> code;
    if (code_search(g, covered, code)) {
        std::sort(code.begin(), code.end());
        return code;
    }
    return std::nullopt;
}

std::string Spectrum::to_string() const {
    std::ostringstream s;
    s << std::setprecision(12);
    for (auto [rep, mult] : clusters) {
        double v = (std::fabs(rep) < 1e-12) ? 0.0 : rep;  // avoid "-0"
        s << v << " " << mult << "\n";
    }
    return s.str();
}

}  // namespace magiclab
