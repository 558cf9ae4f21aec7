#include "graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include <json.hpp>

#include "errors.hpp"

namespace rpg {

std::vector<std::vector<int>> components(const SimpleGraph& g) {
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(g.n, 0);
    for (int s = 0; s < g.n; ++s) {
        if (seen[s]) continue;
        std::vector<int> comp;
        std::deque<int> q{s};
        seen[s] = 1;
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            comp.push_back(u);
            g.adj[u].for_each([&](int v) {
                if (!seen[v]) {
                    seen[v] = 1;
                    q.push_back(v);
                }
            });
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool is_connected(const SimpleGraph& g) {
    return g.n <= 1 || components(g).size() == 1;
}

std::vector<int> bfs_distances(const SimpleGraph& g, int src) {
    std::vector<int> dist(g.n, -1);
    dist[src] = 0;
    std::deque<int> q{src};
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        g.adj[u].for_each([&](int v) {
            if (dist[v] == -1) {
                dist[v] = dist[u] + 1;
                q.push_back(v);
            }
        });
    }
    return dist;
}

std::optional<int> diameter(const SimpleGraph& g) {
    if (g.n == 0) return std::nullopt;
    if (g.n == 1) return 0;
    int d = 0;
    for (int v = 0; v < g.n; ++v) {
        auto dist = bfs_distances(g, v);
        for (int x : dist) {
            if (x == -1) return std::nullopt;  // disconnected
            d = std::max(d, x);
        }
    }
    return d;
}

std::optional<int> girth(const SimpleGraph& g) {
    // Shortest cycle through an edge (u,v) = dist(u,v) without that edge, + 1.
    int best = -1;
    for (auto [u, v] : g.edges()) {
        // BFS from u avoiding the edge u-v.
        std::vector<int> dist(g.n, -1);
        dist[u] = 0;
        std::deque<int> q{u};
        while (!q.empty()) {
            int x = q.front();
            q.pop_front();
            g.adj[x].for_each([&](int y) {
                if ((x == u && y == v) || (x == v && y == u)) return;
                if (dist[y] == -1) {
                    dist[y] = dist[x] + 1;
                    q.push_back(y);
                }
            });
        }
        if (dist[v] != -1) {
            int len = dist[v] + 1;
            if (best == -1 || len < best) best = len;
            if (best == 3) return 3;
        }
    }
    if (best == -1) return std::nullopt;
    return best;
}

SimpleGraph complement(const SimpleGraph& g) {
    SimpleGraph c(g.n);
    c.labels = g.labels;
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (!g.has_edge(u, v)) c.add_edge(u, v);
    return c;
}

SimpleGraph induced_subgraph(const SimpleGraph& g, const std::vector<int>& keep) {
    SimpleGraph s(int(keep.size()));
    s.labels.resize(keep.size());
    for (size_t i = 0; i < keep.size(); ++i)
        if (!g.labels.empty()) s.labels[i] = g.labels[keep[i]];
    for (size_t i = 0; i < keep.size(); ++i)
        for (size_t j = i + 1; j < keep.size(); ++j)
            if (g.has_edge(keep[i], keep[j])) s.add_edge(int(i), int(j));
    return s;
}

namespace {

bool two_colorable(const SimpleGraph& g) {
    std::vector<int> color(g.n, -1);
    for (int s = 0; s < g.n; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::deque<int> q{s};
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            bool bad = false;
            g.adj[u].for_each([&](int v) {
                if (color[v] == -1) {
                    color[v] = 1 - color[u];
                    q.push_back(v);
                } else if (color[v] == color[u]) {
                    bad = true;
                }
            });
            if (bad) return false;
        }
    }
    return true;
}

bool triangle_free(const SimpleGraph& g) {
    for (int u = 0; u < g.n; ++u)
        for (int v = g.adj[u].next(u); v != -1; v = g.adj[u].next(v))
            if (g.adj[u].intersects(g.adj[v])) return false;
    return true;
}

// Induced K_{1,3}: a center with three pairwise non-adjacent neighbors.
bool claw_free(const SimpleGraph& g) {
    for (int c = 0; c < g.n; ++c) {
        auto nb = g.adj[c].to_vector();
        for (size_t i = 0; i < nb.size(); ++i)
            for (size_t j = i + 1; j < nb.size(); ++j) {
                if (g.has_edge(nb[i], nb[j])) continue;
                for (size_t k = j + 1; k < nb.size(); ++k)
                    if (!g.has_edge(nb[i], nb[k]) && !g.has_edge(nb[j], nb[k])) return false;
            }
    }
    return true;
}

}  // namespace

ShapeReport classify_shape(const SimpleGraph& g) {
    ShapeReport r;
    int m = g.edge_count();
    bool connected = is_connected(g);
    auto comps = components(g);

    // Acyclic iff every component is a tree (|E| = n - c).
    r.is_acyclic = (m == g.n - int(comps.size()));
    r.is_tree = r.is_acyclic && connected && g.n >= 1;

    int max_deg = 0, deg1 = 0, deg2 = 0;
    for (int v = 0; v < g.n; ++v) {
        int d = g.degree(v);
        max_deg = std::max(max_deg, d);
        if (d == 1) ++deg1;
        if (d == 2) ++deg2;
    }

    // Star: K_{1,m}; a single vertex counts as the degenerate star.
    int big = 0;
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) >= 2) ++big;
    r.is_star = r.is_tree && big <= 1;

    r.is_path = r.is_tree && max_deg <= 2;
    r.is_cycle = g.n >= 3 && connected && max_deg == 2 && deg2 == g.n;

    r.is_bipartite = two_colorable(g);
    r.is_triangle_free = triangle_free(g);
    r.is_claw_free = claw_free(g);

    // Complete multipartite iff the complement is a disjoint union of cliques.
    SimpleGraph cg = complement(g);
    auto cc = components(cg);
    bool ok = true;
    std::vector<int> parts;
    for (const auto& comp : cc) {
        int k = int(comp.size());
        for (size_t i = 0; i < comp.size() && ok; ++i)
            for (size_t j = i + 1; j < comp.size(); ++j)
                if (!cg.has_edge(comp[i], comp[j])) {
                    ok = false;
                    break;
                }
        parts.push_back(k);
    }
    if (ok && g.n >= 1) {
        std::sort(parts.begin(), parts.end());
        r.multipartite = parts;
    }
    return r;
}

// ---------------------------------------------------------------------------
// Serialization

namespace {

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

template <typename G>
void emit_dot_vertices(std::ostringstream& os, const G& g) {
    for (int v = 0; v < g.n; ++v) {
        os << "  " << v;
        if (!g.labels.empty()) os << " [label=\"" << dot_escape(g.labels[v]) << "\"]";
        os << ";\n";
    }
}

}  // namespace

std::string to_dot(const SimpleGraph& g, const std::string& name) {
    std::ostringstream os;
    os << "graph " << name << " {\n";
    emit_dot_vertices(os, g);
    for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
    os << "}\n";
    return os.str();
}

std::string to_dot(const DiGraph& g, const std::string& name) {
    std::ostringstream os;
    os << "digraph " << name << " {\n";
    emit_dot_vertices(os, g);
    for (int u = 0; u < g.n; ++u)
        g.out_adj[u].for_each([&](int v) { os << "  " << u << " -> " << v << ";\n"; });
    os << "}\n";
    return os.str();
}

std::string to_json(const SimpleGraph& g) {
    nlohmann::json j;
    j["n"] = g.n;
    auto edges = nlohmann::json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    j["edges"] = edges;
    if (!g.labels.empty()) j["labels"] = g.labels;
    return j.dump();
}

std::string to_json(const DiGraph& g) {
    nlohmann::json j;
    j["n"] = g.n;
    j["directed"] = true;
    auto arcs = nlohmann::json::array();
    for (int u = 0; u < g.n; ++u)
        g.out_adj[u].for_each([&](int v) { arcs.push_back({u, v}); });
    j["edges"] = arcs;
    if (!g.labels.empty()) j["labels"] = g.labels;
    return j.dump();
}

std::string to_csv_edges(const SimpleGraph& g) {
    std::ostringstream os;
    for (auto [u, v] : g.edges()) os << u << ',' << v << '\n';
    return os.str();
}

std::string to_csv_edges(const DiGraph& g) {
    std::ostringstream os;
    for (int u = 0; u < g.n; ++u)
        g.out_adj[u].for_each([&](int v) { os << u << ',' << v << '\n'; });
    return os.str();
}

SimpleGraph simple_graph_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("invalid graph JSON: ") + e.what());
    }
    if (!j.contains("n") || !j.contains("edges")) throw ParseError("graph JSON needs \"n\" and \"edges\"");
    SimpleGraph g(j["n"].get<int>());
    for (const auto& e : j["edges"]) {
        int u = e[0].get<int>(), v = e[1].get<int>();
        if (u < 0 || v < 0 || u >= g.n || v >= g.n || u == v)
            throw ParseError("bad edge in graph JSON");
        g.add_edge(u, v);
    }
    if (j.contains("labels")) g.labels = j["labels"].get<std::vector<std::string>>();
    return g;
}

}  // namespace rpg
