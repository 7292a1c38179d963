#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace gci {

// Simple undirected connected graph over agents 0..n-1. Immutable after
// construction; edges are kept canonical (u < v, sorted) and the adjacency
// lists mirror them.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> adj;

    static Graph from_edges(int n, std::vector<std::pair<int, int>> edges);

    int edge_count() const { return static_cast<int>(edges.size()); }
    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    bool has_edge(int u, int v) const;
};

// Constructors for the graph families. Randomized families are deterministic
// per seed and retry with derived sub-seeds until simple and connected.
Graph line_graph(int n);
Graph ring_graph(int n);
Graph star_graph(int n);
Graph complete_graph(int n);
Graph random_tree(int n, uint64_t seed);
Graph random_kregular(int k, int n, uint64_t seed);
Graph random_bipartite(int a, int b, double p, uint64_t seed);

Graph add_edge(const Graph& g, int u, int v);
Graph del_edge(const Graph& g, int u, int v);

// Exact class oracles.
bool is_line(const Graph& g);
bool is_ring(const Graph& g);
bool is_star(const Graph& g);
bool is_tree(const Graph& g);
bool is_kregular(const Graph& g, int k);
bool is_bipartite(const Graph& g);

// Edge-list text format, bit-exact: "n m\n" then m lines "u v\n" with u < v,
// 0-indexed, LF endings.
Graph parse_graph_file(const std::string& text);
std::string write_graph_file(const Graph& g);
Graph load_graph_file(const std::string& path);

// Spec strings: "line:N", "ring:N", "star:N", "complete:N", "tree:N:SEED",
// "kregular:K:N:SEED", "bipartite:A:B:P:SEED", "file:PATH", optionally
// followed by mutations "+add-edge:U:V" / "+del-edge:U:V".
Graph parse_graph_spec(const std::string& spec);

} // namespace gci
