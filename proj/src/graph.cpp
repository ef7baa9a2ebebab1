#include "bmat/graph.hpp"

#include <set>
#include <stdexcept>

namespace bmat {

std::vector<Label> Graph::labels() const {
    std::vector<Label> out;
    out.reserve(edges.size());
    for (const auto& e : edges) out.push_back(e.label);
    return out;
}

void validate(const Graph& g) {
    std::set<Label> seen;
    for (const auto& e : g.edges) {
        if (e.u < 0 || e.v < 0 || e.u >= g.num_vertices || e.v >= g.num_vertices)
            throw std::invalid_argument("graph: endpoint out of range on edge '" + e.label + "'");
        if (!seen.insert(e.label).second) throw std::invalid_argument("graph: duplicate edge label '" + e.label + "'");
    }
}

BinaryMatroid cycle_matroid(const Graph& g) {
    validate(g);
    BitMatrix inc(static_cast<std::size_t>(g.num_vertices), g.edges.size());
    for (std::size_t j = 0; j < g.edges.size(); ++j) {
        const Edge& e = g.edges[j];
        if (e.u == e.v) continue;
        inc.set(static_cast<std::size_t>(e.u), j, true);
        inc.set(static_cast<std::size_t>(e.v), j, true);
    }
    return BinaryMatroid(g.labels(), inc);
}

BinaryMatroid bond_matroid(const Graph& g) {
    validate(g);
    BitMatrix inc(static_cast<std::size_t>(g.num_vertices), g.edges.size());
    for (std::size_t j = 0; j < g.edges.size(); ++j) {
        const Edge& e = g.edges[j];
        if (e.u == e.v) continue;
        inc.set(static_cast<std::size_t>(e.u), j, true);
        inc.set(static_cast<std::size_t>(e.v), j, true);
    }
    // The cycle space of the graph is the row space of the bond matroid.
    return BinaryMatroid(g.labels(), nullspace(inc));
}

Graph complete_graph(int n, const std::string& prefix) {
    Graph g;
    g.num_vertices = n;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j, prefix + std::to_string(i) + std::to_string(j));
    return g;
}

Graph complete_bipartite(int a, int b, const std::string& prefix) {
    Graph g;
    g.num_vertices = a + b;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) g.add_edge(i, a + j, prefix + std::to_string(i) + std::to_string(a + j));
    return g;
}

Graph cycle_graph(int n, const std::string& prefix) {
    Graph g;
    g.num_vertices = n;
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n, prefix + "c" + std::to_string(i));
    return g;
}

Graph wheel_graph(int spokes, const std::string& prefix) {
    Graph g;
    g.num_vertices = spokes + 1;
    for (int i = 0; i < spokes; ++i) {
        g.add_edge(i, (i + 1) % spokes, prefix + "r" + std::to_string(i));
        g.add_edge(i, spokes, prefix + "s" + std::to_string(i));
    }
    return g;
}

}  // namespace bmat
