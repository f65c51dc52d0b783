#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "magiclab/graph.hpp"

namespace magiclab {

constexpr double kDefaultClusterTol = 1e-7;

struct Spectrum {
    std::vector<double> eigenvalues;               // sorted ascending, length n
    std::vector<std::pair<double, int>> clusters;  // (representative, multiplicity)
    double tol = kDefaultClusterTol;

    std::string to_string() const;  // lines "value multiplicity", 12 sig digits
};

struct CheckResult {
    bool pass = false;
    std::string tag;
};

struct SrgParams {
    int r = 0, a = 0, b = 0;
};

struct CiGapMultiplicity {
    int m1 = 0, m2 = 0, m = 0;
};

Spectrum make_spectrum(std::vector<double> eigenvalues, double tol = kDefaultClusterTol);

// Dense symmetric eigensolver (cyclic Jacobi). Throws on non-convergence.
Spectrum eigenvalues_symmetric(const Graph& g, double tol = kDefaultClusterTol,
                               int cap = 512);

Spectrum cycle_spectrum(int n, double tol = kDefaultClusterTol);
Spectrum complete_spectrum(int n, double tol = kDefaultClusterTol);
Spectrum complete_bipartite_spectrum(int m, int n, double tol = kDefaultClusterTol);
Spectrum circulant_spectrum(int n, const std::set<int>& steps,
                            double tol = kDefaultClusterTol);
Spectrum strong_product_spectrum(const Spectrum& a, const Spectrum& b,
                                 double tol = kDefaultClusterTol);

int multiplicity_of_minus_one(const Spectrum& sp);

CheckResult necessary_regular_cdm(const Graph& g, double tol = kDefaultClusterTol);
CheckResult necessary_line_graph(const Graph& g, double tol = kDefaultClusterTol);

std::optional<SrgParams> detect_strongly_regular(const Graph& g);
CheckResult strongly_regular_cdm_test(const Graph& g);

CiGapMultiplicity ci_gap_multiplicity(int n, int k);

// variant 1: sum_{s=1..k} cos(sx) = -1/2, roots ±2jπ/(2k+1), j=1..k.
// variant 2: sum_{s=1..k-1} cos(sx) + cos((k+1)x) = -1/2, adds ±π/3.
std::vector<double> cos_sum_root_check(int k, int variant);

std::optional<std::vector<int>> find_perfect_code(const Graph& g);

}  // namespace magiclab
