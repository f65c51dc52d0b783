#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "magiclab/constructions.hpp"
#include "magiclab/graph.hpp"
#include "magiclab/labeling.hpp"
#include "magiclab/partition.hpp"
#include "magiclab/search.hpp"
#include "magiclab/spectral.hpp"

namespace {

using namespace magiclab;

int as_int(const std::string& s) {
    size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("not an integer: " + s);
    return v;
}

std::vector<int> as_int_list(const std::string& s) {
    std::vector<int> out;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, ',')) out.push_back(as_int(item));
    if (out.empty()) throw std::invalid_argument("empty integer list");
    return out;
}

std::string take(const std::vector<std::string>& toks, size_t& pos) {
    if (pos >= toks.size()) throw std::invalid_argument("missing family argument");
    return toks[pos++];
}

// Family expression grammar (prefix notation):
//   cycle N | complete N | kmn M N | circulant N s1,s2,... | ckn C N |
//   strong <family> <family> | linegraph <family> |
//   blowup <family> p1,p2,... | cmxcn M N | knxg N <family>
Graph parse_family(const std::vector<std::string>& toks, size_t& pos) {
    std::string name = take(toks, pos);
    if (name == "cycle") return new_cycle(as_int(take(toks, pos)));
    if (name == "complete") return new_complete(as_int(take(toks, pos)));
    if (name == "kmn") {
        int m = as_int(take(toks, pos));
        return new_complete_bipartite(m, as_int(take(toks, pos)));
    }
    if (name == "circulant") {
        int n = as_int(take(toks, pos));
        auto steps = as_int_list(take(toks, pos));
        return new_circulant(n, std::set<int>(steps.begin(), steps.end()));
    }
    if (name == "ckn") {
        int c = as_int(take(toks, pos));
        return new_disjoint_copies(c, new_complete(as_int(take(toks, pos))));
    }
    if (name == "strong") {
        Graph g = parse_family(toks, pos);
        return strong_product(g, parse_family(toks, pos));
    }
    if (name == "linegraph") return line_graph(parse_family(toks, pos));
    if (name == "blowup") {
        Graph base = parse_family(toks, pos);
        return blow_up({base, as_int_list(take(toks, pos))});
    }
    if (name == "cmxcn") {
        int m = as_int(take(toks, pos));
        return strong_product(new_cycle(m), new_cycle(as_int(take(toks, pos))));
    }
    if (name == "knxg") {
        int n = as_int(take(toks, pos));
        return strong_product(new_complete(n), parse_family(toks, pos));
    }
    throw std::invalid_argument("unknown family: " + name);
}

Graph parse_family_all(const std::vector<std::string>& toks) {
    size_t pos = 0;
    Graph g = parse_family(toks, pos);
    if (pos != toks.size()) throw std::invalid_argument("trailing family arguments");
    return g;
}

// Closed-form spectra exist for cycle/complete/kmn/circulant/ckn and strong
// products of such families.
Spectrum closed_form_spectrum(const std::vector<std::string>& toks, size_t& pos,
                              double tol) {
    std::string name = take(toks, pos);
    if (name == "cycle") return cycle_spectrum(as_int(take(toks, pos)), tol);
    if (name == "complete") return complete_spectrum(as_int(take(toks, pos)), tol);
    if (name == "kmn") {
        int m = as_int(take(toks, pos));
        return complete_bipartite_spectrum(m, as_int(take(toks, pos)), tol);
    }
    if (name == "circulant") {
        int n = as_int(take(toks, pos));
        auto steps = as_int_list(take(toks, pos));
        return circulant_spectrum(n, std::set<int>(steps.begin(), steps.end()), tol);
    }
    if (name == "ckn") {
        int c = as_int(take(toks, pos));
        int n = as_int(take(toks, pos));
        std::vector<double> eig;
        for (int t = 0; t < c; ++t) {
            auto one = complete_spectrum(n, tol);
            eig.insert(eig.end(), one.eigenvalues.begin(), one.eigenvalues.end());
        }
        return make_spectrum(std::move(eig), tol);
    }
    if (name == "strong") {
        Spectrum a = closed_form_spectrum(toks, pos, tol);
        return strong_product_spectrum(a, closed_form_spectrum(toks, pos, tol), tol);
    }
    if (name == "cmxcn") {
        int m = as_int(take(toks, pos));
        return strong_product_spectrum(cycle_spectrum(m, tol),
                                       cycle_spectrum(as_int(take(toks, pos)), tol), tol);
    }
    if (name == "knxg") {
        int n = as_int(take(toks, pos));
        Spectrum a = complete_spectrum(n, tol);
        return strong_product_spectrum(a, closed_form_spectrum(toks, pos, tol), tol);
    }
    throw std::invalid_argument("no closed-form spectrum for family: " + name);
}

Graph load_graph(const std::string& path) {
    if (path == "-") return read_edge_list(std::cin);
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_edge_list(in);
}

Labeling load_labeling(const std::string& path) {
    if (path == "-") return read_labeling(std::cin);
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_labeling(in);
}

double cluster_tol_from_env() {
    if (const char* env = std::getenv("MAGICLAB_TOL")) return std::atof(env);
    return kDefaultClusterTol;
}

void print_labeling_grid(std::ostream& out, const Labeling& l, int cols) {
    out << l.values.size() << "\n";
    for (size_t i = 0; i < l.values.size(); ++i)
        out << l.values[i]
            << ((i + 1) % static_cast<size_t>(cols) == 0 || i + 1 == l.values.size()
                    ? "\n"
                    : " ");
}

int cmd_construct(const std::vector<std::string>& toks) {
    std::string fam = toks.empty() ? "" : toks[0];
    size_t pos = 1;
    if (fam == "cmxcn") {
        int m = as_int(take(toks, pos)), n = as_int(take(toks, pos));
        LabelingResult r = label_cycle_strong_cycle_any(m, n);
        if (!r.feasible) {
            std::cout << "INFEASIBLE " << r.tag << "\n";
            return 1;
        }
        Graph g = strong_product(new_cycle(m), new_cycle(n));
        print_labeling_grid(std::cout, r.labeling, n);
        std::cout << verify_cdm(g, r.labeling).to_string() << "\n";
        return 0;
    }
    if (fam == "knxg") {
        int nk = as_int(take(toks, pos));
        Graph h = parse_family(toks, pos);
        Labeling l = label_complete_strong(nk, h);
        Graph g = strong_product(new_complete(nk), h);
        print_labeling_grid(std::cout, l, h.n());
        std::cout << verify_cdm(g, l).to_string() << "\n";
        return 0;
    }
    if (fam == "circulant") {
        int n = as_int(take(toks, pos));
        int c = as_int(take(toks, pos));
        int k = as_int(take(toks, pos));
        LabelingResult r = label_circulant(n, c, k);
        if (!r.feasible) {
            std::cout << "INFEASIBLE " << r.tag << "\n";
            return 1;
        }
        std::set<int> steps;
        for (int s = 1; s <= k; ++s) steps.insert(std::min(s * c, n - s * c));
        Graph g = new_circulant(n, steps);
        print_labeling_grid(std::cout, r.labeling, n);
        std::cout << verify_cdm(g, r.labeling).to_string() << "\n";
        return 0;
    }
    if (fam == "ckn") {
        int c = as_int(take(toks, pos));
        int n = as_int(take(toks, pos));
        LabelingResult r = label_disjoint_complete(c, n);
        if (!r.feasible) {
            std::cout << "INFEASIBLE " << r.tag << "\n";
            return 1;
        }
        Graph g = new_disjoint_copies(c, new_complete(n));
        print_labeling_grid(std::cout, r.labeling, n);
        std::cout << verify_cdm(g, r.labeling).to_string() << "\n";
        return 0;
    }
    if (fam == "blowup") {
        Graph base = parse_family(toks, pos);
        auto sizes = as_int_list(take(toks, pos));
        BlowUpLabelingResult r = blow_up_labeling(base, sizes);
        if (!r.feasible) {
            std::cout << "INFEASIBLE " << r.tag << "\n";
            return 1;
        }
        Graph g = blow_up({base, sizes});
        print_labeling_grid(std::cout, r.labeling, g.n());
        std::cout << verify_cdm(g, r.labeling).to_string() << "\n";
        return 0;
    }
    throw std::invalid_argument("constructible families: cmxcn knxg circulant ckn blowup");
}

int cmd_feasible(const std::vector<std::string>& toks) {
    std::string what = toks.empty() ? "" : toks[0];
    size_t pos = 1;
    Feasibility f;
    if (what == "cmxcn") {
        int m = as_int(take(toks, pos));
        f = cdm_cycle_strong_cycle_iff(m, as_int(take(toks, pos)));
    } else if (what == "circulant") {
        int n = as_int(take(toks, pos));
        int c = as_int(take(toks, pos));
        LabelingResult r = label_circulant(n, c, as_int(take(toks, pos)));
        f = {r.feasible, r.tag};
    } else if (what == "ckn") {
        int c = as_int(take(toks, pos));
        LabelingResult r = label_disjoint_complete(c, as_int(take(toks, pos)));
        f = {r.feasible, r.tag};
    } else if (what == "prop3") {
        int n = as_int(take(toks, pos));
        f = ci_prop3(n, as_int(take(toks, pos)));
    } else if (what == "prop4") {
        int n = as_int(take(toks, pos));
        f = ci_prop4(n, as_int(take(toks, pos)));
    } else if (what == "rectangle") {
        int m = as_int(take(toks, pos)), n = as_int(take(toks, pos));
        bool ok = (m - n) % 2 == 0 && !(m == 2 && n == 2) && m > 1 && n > 1;
        f = {ok, "thm1.harmuth"};
    } else if (what == "partition") {
        int k = as_int(take(toks, pos));
        std::vector<int> sizes;
        for (int i = 0; i < k; ++i) sizes.push_back(as_int(take(toks, pos)));
        PartitionResult r = solve_partition(sizes);
        f = {r.solved(), r.solved() ? "partition.solved" : "partition." + r.tag()};
    } else {
        throw std::invalid_argument(
            "feasible targets: cmxcn circulant ckn prop3 prop4 rectangle partition");
    }
    std::cout << (f.feasible ? "FEASIBLE " : "INFEASIBLE ") << f.tag << "\n";
    return f.feasible ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"closed distance magic labelings: constructions, spectra, oracles"};
    app.require_subcommand(1);

    std::vector<std::string> gen_toks, con_toks, feas_toks, spec_toks, search_toks;
    std::string graph_path, labeling_path;
    double tol_flag = -1.0;
    bool closed_form = false;
    int rect_m = 0, rect_n = 0;
    std::vector<int> part_sizes;
    int part_k = 0;
    int max_vertices = 11, max_cells = 16;
    uint64_t node_limit = 0;

    auto* gen = app.add_subcommand("gen", "emit a family as an edge list");
    gen->add_option("family", gen_toks)->expected(-1)->required();

    auto* con = app.add_subcommand("construct", "construct a CDM labeling");
    con->add_option("family", con_toks)->expected(-1)->required();

    auto* chk = app.add_subcommand("check", "verify a labeling against a graph");
    chk->add_option("graph", graph_path)->required();
    chk->add_option("labeling", labeling_path)->required();

    auto* spec = app.add_subcommand("spectrum", "adjacency spectrum");
    spec->add_option("graph", graph_path);
    spec->add_option("--family", spec_toks)->expected(-1);
    spec->add_flag("--closed-form", closed_form);
    spec->add_option("--tol", tol_flag);

    auto* feas = app.add_subcommand("feasible", "theorem-tagged feasibility verdicts");
    feas->add_option("target", feas_toks)->expected(-1)->required();

    auto* srch = app.add_subcommand("search", "brute-force oracles");
    srch->add_option("what", search_toks)->expected(-1)->required();
    srch->add_option("--max-vertices", max_vertices);
    srch->add_option("--max-cells", max_cells);
    srch->add_option("--node-limit", node_limit);

    auto* part = app.add_subcommand("partition", "equal-sum partition with given sizes");
    part->add_option("k", part_k)->required();
    part->add_option("sizes", part_sizes)->expected(-1)->required();

    auto* rect = app.add_subcommand("rectangle", "magic (m,n)-rectangle");
    rect->add_option("m", rect_m)->required();
    rect->add_option("n", rect_n)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*gen) {
            write_edge_list(std::cout, parse_family_all(gen_toks));
            return 0;
        }
        if (*con) return cmd_construct(con_toks);
        if (*chk) {
            Graph g = load_graph(graph_path);
            Verdict v = verify_cdm(g, load_labeling(labeling_path));
            std::cout << v.to_string() << "\n";
            return v.magic ? 0 : 1;
        }
        if (*spec) {
            double tol = tol_flag > 0 ? tol_flag : cluster_tol_from_env();
            Spectrum sp;
            if (closed_form || !spec_toks.empty()) {
                if (spec_toks.empty())
                    throw std::invalid_argument("--closed-form requires --family");
                if (closed_form) {
                    size_t pos = 0;
                    sp = closed_form_spectrum(spec_toks, pos, tol);
                    if (pos != spec_toks.size())
                        throw std::invalid_argument("trailing family arguments");
                } else {
                    sp = eigenvalues_symmetric(parse_family_all(spec_toks), tol);
                }
            } else {
                if (graph_path.empty())
                    throw std::invalid_argument("need a graph file or --family");
                sp = eigenvalues_symmetric(load_graph(graph_path), tol);
            }
            std::cout << sp.to_string();
            return 0;
        }
        if (*feas) return cmd_feasible(feas_toks);
        if (*srch) {
            SearchBudget budget;
            budget.max_vertices = max_vertices;
            budget.max_cells = max_cells;
            if (node_limit > 0) budget.node_limit = node_limit;
            std::string what = search_toks.empty() ? "" : search_toks[0];
            size_t pos = 1;
            if (what == "rectangle") {
                int m = as_int(take(search_toks, pos));
                SearchOutcome o =
                    brute_force_magic_rectangle(m, as_int(take(search_toks, pos)), budget);
                std::cout << outcome_to_string(o) << "\n";
                return o == SearchOutcome::found ? 0
                       : o == SearchOutcome::exhausted_negative ? 1 : 2;
            }
            if (what != "cdm" && what != "antimagic")
                throw std::invalid_argument("search targets: cdm antimagic rectangle");
            Graph g = load_graph(take(search_toks, pos));
            SearchResult r = what == "cdm" ? brute_force_cdm(g, budget)
                                           : brute_force_distance_antimagic(g, budget);
            std::cout << outcome_to_string(r.outcome) << "\n";
            if (r.outcome == SearchOutcome::found) write_labeling(std::cout, r.labeling);
            return r.outcome == SearchOutcome::found ? 0
                   : r.outcome == SearchOutcome::exhausted_negative ? 1 : 2;
        }
        if (*part) {
            if (static_cast<int>(part_sizes.size()) != part_k)
                throw std::invalid_argument("expected k part sizes");
            PartitionResult r = solve_partition(part_sizes);
            std::cout << r.to_string();
            return r.solved() ? 0 : 1;
        }
        if (*rect) {
            auto r = magic_rectangle(rect_m, rect_n);
            if (!r) {
                std::cout << "NONEXISTENT thm1.harmuth\n";
                return 1;
            }
            std::cout << r->to_string();
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
