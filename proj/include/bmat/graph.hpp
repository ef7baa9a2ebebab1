#pragma once

#include <string>
#include <vector>

#include "bmat/matroid.hpp"

namespace bmat {

struct Edge {
    int u = 0, v = 0;
    Label label;
};

// Multigraph with labeled edges; loops and parallel edges allowed.
struct Graph {
    int num_vertices = 0;
    std::vector<Edge> edges;

    void add_edge(int u, int v, Label l) { edges.push_back({u, v, std::move(l)}); }
    std::vector<Label> labels() const;
};

// Throws std::invalid_argument on bad endpoints or duplicate labels.
void validate(const Graph& g);

BinaryMatroid cycle_matroid(const Graph& g);
BinaryMatroid bond_matroid(const Graph& g);

Graph complete_graph(int n, const std::string& prefix = "");
Graph complete_bipartite(int a, int b, const std::string& prefix = "");
Graph cycle_graph(int n, const std::string& prefix = "");
Graph wheel_graph(int spokes, const std::string& prefix = "");

}  // namespace bmat
