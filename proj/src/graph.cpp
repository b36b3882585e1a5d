#include "latcoh/graph.hpp"

#include <algorithm>
#include <cctype>
#include <queue>
#include <sstream>

#include <json.hpp>

namespace latcoh {

namespace {

bool valid_name(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

}  // namespace

int PlumbingGraph::index_of(const std::string& name) const {
    for (int i = 0; i < n(); ++i)
        if (names[i] == name) return i;
    return -1;
}

bool PlumbingGraph::has_edge(int a, int b) const {
    if (a > b) std::swap(a, b);
    return std::find(edges.begin(), edges.end(), std::make_pair(a, b)) != edges.end();
}

std::vector<std::vector<int>> PlumbingGraph::adjacency() const {
    std::vector<std::vector<int>> adj(n());
    for (auto [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    return adj;
}

void PlumbingGraph::validate() const {
    if (n() == 0) throw ParseError("graph has no vertices", 0);
    for (int i = 0; i < n(); ++i) {
        if (!valid_name(names[i])) throw ParseError("invalid vertex name '" + names[i] + "'", 0);
        for (int j = i + 1; j < n(); ++j)
            if (names[i] == names[j]) throw ParseError("duplicate vertex '" + names[i] + "'", 0);
    }
    for (auto [a, b] : edges) {
        if (a < 0 || b < 0 || a >= n() || b >= n() || a == b)
            throw ParseError("invalid edge endpoints", 0);
    }
    if (edges.size() != static_cast<size_t>(n() - 1))
        throw ParseError(edges.size() > static_cast<size_t>(n() - 1) ? "cycle detected"
                                                                     : "disconnected graph",
                         0);
    // n-1 edges + connected <=> tree
    std::vector<char> seen(n(), 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    auto adj = adjacency();
    int count = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                q.push(w);
            }
    }
    if (count != n()) throw ParseError("disconnected graph", 0);
}

std::string PlumbingGraph::serialize() const {
    std::ostringstream out;
    for (int i = 0; i < n(); ++i) out << "vertex " << names[i] << " " << weights[i] << "\n";
    auto sorted = edges;
    std::sort(sorted.begin(), sorted.end(), [&](auto& e1, auto& e2) {
        auto key = [&](const std::pair<int, int>& e) {
            std::string a = names[e.first], b = names[e.second];
            if (b < a) std::swap(a, b);
            return std::make_pair(a, b);
        };
        return key(e1) < key(e2);
    });
    for (auto [a, b] : sorted) {
        std::string x = names[a], y = names[b];
        if (y < x) std::swap(x, y);
        out << "edge " << x << " " << y << "\n";
    }
    return out.str();
}

std::string PlumbingGraph::serialize_json() const {
    nlohmann::ordered_json j;
    j["vertices"] = nlohmann::ordered_json::array();
    for (int i = 0; i < n(); ++i)
        j["vertices"].push_back({{"name", names[i]}, {"weight", weights[i]}});
    j["edges"] = nlohmann::ordered_json::array();
    for (auto [a, b] : edges) {
        std::string x = names[a], y = names[b];
        if (y < x) std::swap(x, y);
        j["edges"].push_back({x, y});
    }
    return j.dump();
}

std::string PlumbingGraph::to_dot() const {
    std::ostringstream out;
    out << "graph plumbing {\n";
    for (int i = 0; i < n(); ++i)
        out << "  " << names[i] << " [label=\"" << names[i] << " (" << weights[i] << ")\"];\n";
    for (auto [a, b] : edges) out << "  " << names[a] << " -- " << names[b] << ";\n";
    out << "}\n";
    return out.str();
}

PlumbingGraph parse_graph(const std::string& text) {
    PlumbingGraph g;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok) || tok[0] == '#') continue;
        if (tok == "vertex") {
            std::string name, weight_str, extra;
            if (!(ls >> name >> weight_str))
                throw ParseError("expected 'vertex <name> <weight>'", lineno);
            if (ls >> extra) throw ParseError("trailing tokens after vertex declaration", lineno);
            if (!valid_name(name)) throw ParseError("invalid vertex name '" + name + "'", lineno);
            if (g.index_of(name) >= 0) throw ParseError("duplicate vertex '" + name + "'", lineno);
            size_t pos = 0;
            long long w;
            try {
                w = std::stoll(weight_str, &pos);
            } catch (const std::exception&) {
                throw ParseError("invalid weight '" + weight_str + "'", lineno);
            }
            if (pos != weight_str.size())
                throw ParseError("invalid weight '" + weight_str + "'", lineno);
            g.names.push_back(name);
            g.weights.push_back(w);
        } else if (tok == "edge") {
            std::string a, b, extra;
            if (!(ls >> a >> b)) throw ParseError("expected 'edge <name> <name>'", lineno);
            if (ls >> extra) throw ParseError("trailing tokens after edge declaration", lineno);
            int ia = g.index_of(a), ib = g.index_of(b);
            if (ia < 0) throw ParseError("unknown vertex '" + a + "' in edge", lineno);
            if (ib < 0) throw ParseError("unknown vertex '" + b + "' in edge", lineno);
            if (ia == ib) throw ParseError("self-loop on '" + a + "'", lineno);
            if (g.has_edge(ia, ib)) throw ParseError("duplicate edge", lineno);
            g.edges.emplace_back(std::min(ia, ib), std::max(ia, ib));
        } else {
            throw ParseError("unknown directive '" + tok + "'", lineno);
        }
    }
    g.validate();
    return g;
}

PlumbingGraph parse_graph_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("JSON parse error: ") + e.what(), 0);
    }
    PlumbingGraph g;
    try {
        for (const auto& v : j.at("vertices")) {
            std::string name = v.at("name").get<std::string>();
            if (g.index_of(name) >= 0) throw ParseError("duplicate vertex '" + name + "'", 0);
            g.names.push_back(name);
            g.weights.push_back(v.at("weight").get<long long>());
        }
        for (const auto& e : j.at("edges")) {
            int a = g.index_of(e.at(0).get<std::string>());
            int b = g.index_of(e.at(1).get<std::string>());
            if (a < 0 || b < 0) throw ParseError("unknown vertex in edge", 0);
            if (a == b) throw ParseError("self-loop", 0);
            if (g.has_edge(a, b)) throw ParseError("duplicate edge", 0);
            g.edges.emplace_back(std::min(a, b), std::max(a, b));
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("JSON structure error: ") + e.what(), 0);
    }
    g.validate();
    return g;
}

PlumbingGraph parse_graph_auto(const std::string& text) {
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        return c == '{' ? parse_graph_json(text) : parse_graph(text);
    }
    throw ParseError("empty input", 0);
}

PlumbingGraph blowup_at_vertex(const PlumbingGraph& g, int v) {
    PlumbingGraph r = g;
    std::string name = "b" + std::to_string(r.n());
    while (r.index_of(name) >= 0) name += "_";
    r.names.push_back(name);
    r.weights.push_back(-1);
    r.weights[v] -= 1;
    r.edges.emplace_back(v, r.n() - 1);
    r.validate();
    return r;
}

PlumbingGraph blowup_at_edge(const PlumbingGraph& g, int edge_index) {
    PlumbingGraph r = g;
    auto [a, b] = r.edges[edge_index];
    r.edges.erase(r.edges.begin() + edge_index);
    std::string name = "b" + std::to_string(r.n());
    while (r.index_of(name) >= 0) name += "_";
    r.names.push_back(name);
    r.weights.push_back(-1);
    r.weights[a] -= 1;
    r.weights[b] -= 1;
    int e = r.n() - 1;
    r.edges.emplace_back(a, e);
    r.edges.emplace_back(b, e);
    r.validate();
    return r;
}

PlumbingGraph permute_vertices(const PlumbingGraph& g, const std::vector<int>& perm) {
    PlumbingGraph r;
    std::vector<int> inv(g.n());
    for (int i = 0; i < g.n(); ++i) {
        r.names.push_back(g.names[perm[i]]);
        r.weights.push_back(g.weights[perm[i]]);
        inv[perm[i]] = i;
    }
    for (auto [a, b] : g.edges) {
        int x = inv[a], y = inv[b];
        r.edges.emplace_back(std::min(x, y), std::max(x, y));
    }
    r.validate();
    return r;
}

PlumbingGraph random_blown_up_tree(std::mt19937_64& rng, int base_vertices, int extra_blowups) {
    PlumbingGraph g;
    for (int i = 0; i < base_vertices; ++i) {
        g.names.push_back("v" + std::to_string(i));
        g.weights.push_back(-2 - static_cast<long long>(rng() % 4));
        if (i > 0) {
            int parent = static_cast<int>(rng() % i);
            g.edges.emplace_back(parent, i);
        }
    }
    g.validate();
    for (int i = 0; i < extra_blowups; ++i) {
        if (!g.edges.empty() && rng() % 2 == 0)
            g = blowup_at_edge(g, static_cast<int>(rng() % g.edges.size()));
        else
            g = blowup_at_vertex(g, static_cast<int>(rng() % g.n()));
    }
    return g;
}

}  // namespace latcoh
