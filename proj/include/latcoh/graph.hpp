#pragma once

#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "latcoh/numeric.hpp"

namespace latcoh {

struct ParseError : std::runtime_error {
    int line;
    ParseError(const std::string& msg, int line_) : std::runtime_error(msg), line(line_) {}
};

// Weighted tree of sphere vertices. Vertex order = declaration order = canonical
// basis order for every vector downstream.
struct PlumbingGraph {
    std::vector<std::string> names;
    std::vector<long long> weights;
    std::vector<std::pair<int, int>> edges;  // index pairs, i < j

    int n() const { return static_cast<int>(names.size()); }
    int index_of(const std::string& name) const;  // -1 if absent
    bool has_edge(int a, int b) const;
    std::vector<std::vector<int>> adjacency() const;

    // Checks tree-ness, connectivity, name validity; throws ParseError on failure.
    void validate() const;

    std::string serialize() const;       // canonical text format
    std::string serialize_json() const;  // JSON mirror
    std::string to_dot() const;
};

// Text format: '#' comments; "vertex <name> <weight>"; "edge <a> <b>".
PlumbingGraph parse_graph(const std::string& text);
// JSON mirror: {"vertices":[{"name":...,"weight":...}],"edges":[["a","b"],...]}.
PlumbingGraph parse_graph_json(const std::string& text);
// Dispatches on leading '{'.
PlumbingGraph parse_graph_auto(const std::string& text);

// Good blowups (preserve the boundary 3-manifold).
PlumbingGraph blowup_at_vertex(const PlumbingGraph& g, int v);
PlumbingGraph blowup_at_edge(const PlumbingGraph& g, int edge_index);
// Apply the permutation to vertex order: new position i holds old vertex perm[i].
PlumbingGraph permute_vertices(const PlumbingGraph& g, const std::vector<int>& perm);

// Random negative-definite tree (weights in [-5,-2]) with `extra_blowups` random
// good blowups applied. Deterministic in the seed.
PlumbingGraph random_blown_up_tree(std::mt19937_64& rng, int base_vertices, int extra_blowups);

}  // namespace latcoh
