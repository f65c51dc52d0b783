#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "magiclab/graph.hpp"

namespace magiclab {

struct Labeling {
    std::vector<int> values;  // values[v] = label of vertex v, in {1,...,n}

    bool is_bijection() const;
};

struct Verdict {
    bool magic = false;
    std::optional<long long> constant;  // k' when magic
    // First violating pair in vertex order when not magic (and bijective).
    int v = -1, u = -1;
    long long wv = 0, wu = 0;
    bool bijective = true;

    std::string to_string() const;  // "MAGIC k'=..." / "NOT-MAGIC v=... w=... u=... w=..."
};

// Result of Observation 1's formula k' = (r+1)(n+1)/2 on regular graphs.
struct RegularConstant {
    enum class State { irregular, refuted, value };
    State state = State::irregular;
    long long k_prime = 0;  // valid only when state == value
};

long long weight(const Graph& g, const Labeling& l, int v);
Verdict verify_cdm(const Graph& g, const Labeling& l);
RegularConstant regular_magic_constant(const Graph& g);
bool verify_distance_antimagic(const Graph& g, const Labeling& l);

// Labeling file format: one line "n", then n whitespace-separated integers.
Labeling read_labeling(std::istream& in);
void write_labeling(std::ostream& out, const Labeling& l);

}  // namespace magiclab
