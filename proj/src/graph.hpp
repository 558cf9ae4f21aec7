#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bitset.hpp"

namespace rpg {

// Immutable-by-convention simple graph over vertex ids 0..n-1, adjacency
// stored as per-vertex neighbor bitmasks. No self-loops.
struct SimpleGraph {
    int n = 0;
    std::vector<Bitset> adj;
    std::vector<std::string> labels;

    SimpleGraph() = default;
    explicit SimpleGraph(int vertices) : n(vertices), adj(vertices, Bitset(vertices)) {}

    void add_edge(int u, int v) {
        adj[u].set(v);
        adj[v].set(u);
    }
    bool has_edge(int u, int v) const { return adj[u].test(v); }
    int degree(int v) const { return adj[v].count(); }

    int edge_count() const {
        long s = 0;
        for (int v = 0; v < n; ++v) s += degree(v);
        return int(s / 2);
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> e;
        for (int u = 0; u < n; ++u)
            for (int v = adj[u].next(u); v != -1; v = adj[u].next(v)) e.emplace_back(u, v);
        return e;
    }

    bool operator==(const SimpleGraph& o) const { return n == o.n && adj == o.adj; }
};

struct DiGraph {
    int n = 0;
    std::vector<Bitset> out_adj;
    std::vector<std::string> labels;

    DiGraph() = default;
    explicit DiGraph(int vertices) : n(vertices), out_adj(vertices, Bitset(vertices)) {}

    void add_arc(int u, int v) { out_adj[u].set(v); }
    bool has_arc(int u, int v) const { return out_adj[u].test(v); }

    int arc_count() const {
        int s = 0;
        for (int v = 0; v < n; ++v) s += out_adj[v].count();
        return s;
    }

    SimpleGraph underlying() const {
        SimpleGraph g(n);
        g.labels = labels;
        for (int u = 0; u < n; ++u)
            out_adj[u].for_each([&](int v) {
                if (u != v) g.add_edge(u, v);
            });
        return g;
    }
};

struct ShapeReport {
    bool is_acyclic = false;
    bool is_tree = false;
    bool is_star = false;
    bool is_path = false;
    bool is_cycle = false;
    bool is_bipartite = false;
    bool is_triangle_free = false;
    bool is_claw_free = false;
    // Present iff the graph is complete multipartite; sorted part sizes.
    std::optional<std::vector<int>> multipartite;
};

// nullopt encodes an infinite girth/diameter.
std::vector<std::vector<int>> components(const SimpleGraph& g);
bool is_connected(const SimpleGraph& g);
std::vector<int> bfs_distances(const SimpleGraph& g, int src);
std::optional<int> diameter(const SimpleGraph& g);
std::optional<int> girth(const SimpleGraph& g);
SimpleGraph complement(const SimpleGraph& g);
SimpleGraph induced_subgraph(const SimpleGraph& g, const std::vector<int>& keep);
ShapeReport classify_shape(const SimpleGraph& g);

std::string to_dot(const SimpleGraph& g, const std::string& name = "G");
std::string to_dot(const DiGraph& g, const std::string& name = "G");
std::string to_json(const SimpleGraph& g);
std::string to_json(const DiGraph& g);
std::string to_csv_edges(const SimpleGraph& g);
std::string to_csv_edges(const DiGraph& g);
SimpleGraph simple_graph_from_json(const std::string& text);

}  // namespace rpg
