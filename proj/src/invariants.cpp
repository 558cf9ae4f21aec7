#include "invariants.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include <json.hpp>

#include "errors.hpp"

namespace rpg {

// ---------------------------------------------------------------------------
// Maximum clique: branch and bound with a greedy-coloring bound.
// Vertices are explored in ascending id order for reproducibility.

namespace {

class CliqueSolver {
public:
    explicit CliqueSolver(const SimpleGraph& g) : g_(g) {}

    int solve() {
        if (g_.n == 0) return 0;
        best_ = 1;
        Bitset all(g_.n);
        for (int v = 0; v < g_.n; ++v) all.set(v);
        expand(all, 0);
        return best_;
    }

private:
    // Greedy coloring of cand; returns vertices ordered by color with
    // their color index (1-based); used as an upper bound.
    void color_sort(const Bitset& cand, std::vector<int>& order, std::vector<int>& bound) {
        order.clear();
        bound.clear();
        Bitset left = cand;
        int color = 0;
        while (left.any()) {
            ++color;
            Bitset cls = left;
            while (cls.any()) {
                int v = cls.first();
                cls = cls.minus(g_.adj[v]);
                cls.reset(v);
                left.reset(v);
                order.push_back(v);
                bound.push_back(color);
            }
        }
    }

    void expand(const Bitset& cand, int size) {
        std::vector<int> order, bound;
        color_sort(cand, order, bound);
        for (int i = int(order.size()) - 1; i >= 0; --i) {
            if (size + bound[i] <= best_) return;
            int v = order[i];
            Bitset next = cand & g_.adj[v];
            for (int j = i; j < int(order.size()); ++j) next.reset(order[j]);
            if (size + 1 > best_) best_ = size + 1;
            if (next.any()) expand(next, size + 1);
        }
    }

    const SimpleGraph& g_;
    int best_ = 0;
};

}  // namespace

int clique_number(const SimpleGraph& g, int cap) {
    if (g.n > cap) throw CapExceeded("clique_number: n=" + std::to_string(g.n) +
                                     " exceeds cap " + std::to_string(cap));
    if (g.n == 0) return 0;
    return CliqueSolver(g).solve();
}

int independence_number(const SimpleGraph& g, int cap) {
    if (g.n > cap) throw CapExceeded("independence_number: n=" + std::to_string(g.n) +
                                     " exceeds cap " + std::to_string(cap));
    return clique_number(complement(g), cap);
}

// ---------------------------------------------------------------------------
// Exact chromatic number: iterative deepening on k with DSATUR-ordered
// backtracking. Independent of the clique solver apart from the lower bound.

namespace {

class KColoring {
public:
    KColoring(const SimpleGraph& g, int k) : g_(g), k_(k), color_(g.n, -1) {}

    bool solve() { return place(0, 0); }

private:
    int pick() const {
        int best = -1, best_sat = -1, best_deg = -1;
        for (int v = 0; v < g_.n; ++v) {
            if (color_[v] != -1) continue;
            int sat = 0;
            std::vector<char> seen(k_, 0);
            g_.adj[v].for_each([&](int u) {
                if (color_[u] != -1 && !seen[color_[u]]) {
                    seen[color_[u]] = 1;
                    ++sat;
                }
            });
            int deg = g_.degree(v);
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                best = v;
                best_sat = sat;
                best_deg = deg;
            }
        }
        return best;
    }

    bool place(int colored, int max_used) {
        if (colored == g_.n) return true;
        int v = pick();
        std::vector<char> forbidden(k_, 0);
        g_.adj[v].for_each([&](int u) {
            if (color_[u] != -1) forbidden[color_[u]] = 1;
        });
        int limit = std::min(k_, max_used + 1);
        for (int c = 0; c < limit; ++c) {
            if (forbidden[c]) continue;
            color_[v] = c;
            if (place(colored + 1, std::max(max_used, c + 1))) return true;
            color_[v] = -1;
        }
        return false;
    }

    const SimpleGraph& g_;
    int k_;
    std::vector<int> color_;
};

int greedy_coloring_upper(const SimpleGraph& g) {
    std::vector<int> color(g.n, -1);
    int used = 0;
    for (int v = 0; v < g.n; ++v) {
        std::vector<char> forb(g.n + 1, 0);
        g.adj[v].for_each([&](int u) {
            if (color[u] != -1) forb[color[u]] = 1;
        });
        int c = 0;
        while (forb[c]) ++c;
        color[v] = c;
        used = std::max(used, c + 1);
    }
    return used;
}

}  // namespace

int chromatic_number(const SimpleGraph& g, int cap) {
    if (g.n > cap) throw CapExceeded("chromatic_number: n=" + std::to_string(g.n) +
                                     " exceeds cap " + std::to_string(cap));
    if (g.n == 0) return 0;
    int lo = clique_number(g, cap);
    int hi = greedy_coloring_upper(g);
    for (int k = lo; k < hi; ++k)
        if (KColoring(g, k).solve()) return k;
    return hi;
}

// ---------------------------------------------------------------------------
// Vertex connectivity via unit-capacity max-flow on the split-vertex network.

namespace {

// Max s-t vertex-disjoint paths, stopping early once `limit` is reached.
int vertex_flow(const SimpleGraph& g, int s, int t, int limit) {
    int N = 2 * g.n;  // v_in = 2v, v_out = 2v+1
    std::vector<std::vector<int>> cap(N, std::vector<int>(N, 0));
    for (int v = 0; v < g.n; ++v) cap[2 * v][2 * v + 1] = 1;
    for (int u = 0; u < g.n; ++u)
        g.adj[u].for_each([&](int v) { cap[2 * u + 1][2 * v] = 1; });
    int src = 2 * s + 1, dst = 2 * t;
    int flow = 0;
    while (flow < limit) {
        std::vector<int> prev(N, -1);
        prev[src] = src;
        std::deque<int> q{src};
        while (!q.empty() && prev[dst] == -1) {
            int u = q.front();
            q.pop_front();
            for (int v = 0; v < N; ++v)
                if (cap[u][v] > 0 && prev[v] == -1) {
                    prev[v] = u;
                    q.push_back(v);
                }
        }
        if (prev[dst] == -1) break;
        for (int v = dst; v != src; v = prev[v]) {
            cap[prev[v]][v] -= 1;
            cap[v][prev[v]] += 1;
        }
        ++flow;
    }
    return flow;
}

}  // namespace

int vertex_connectivity(const SimpleGraph& g, int cap) {
    if (g.n > cap) throw CapExceeded("vertex_connectivity: n=" + std::to_string(g.n) +
                                     " exceeds cap " + std::to_string(cap));
    if (g.n <= 1) return 0;
    if (!is_connected(g)) return 0;
    int min_deg = g.n, v0 = 0;
    bool complete = true;
    for (int v = 0; v < g.n; ++v) {
        int d = g.degree(v);
        if (d < g.n - 1) complete = false;
        if (d < min_deg) {
            min_deg = d;
            v0 = v;
        }
    }
    if (complete) return g.n - 1;

    // Even's scheme: flows from a minimum-degree vertex and each of its
    // neighbors to every non-neighbor suffice to hit a minimum cut.
    int best = min_deg;
    std::vector<int> sources{v0};
    g.adj[v0].for_each([&](int u) { sources.push_back(u); });
    for (int s : sources) {
        for (int t = 0; t < g.n; ++t) {
            if (t == s || g.has_edge(s, t)) continue;
            best = std::min(best, vertex_flow(g, s, t, best));
            if (best == 0) return 0;
        }
    }
    return best;
}

// ---------------------------------------------------------------------------
// Cut vertices and cut edges: low-link traversal.

namespace {

struct LowLink {
    const SimpleGraph& g;
    std::vector<int> disc, low;
    std::vector<char> is_cut;
    std::vector<std::pair<int, int>> bridges;
    int timer = 0;

    explicit LowLink(const SimpleGraph& graph)
        : g(graph), disc(graph.n, -1), low(graph.n, 0), is_cut(graph.n, 0) {}

    void dfs(int u, int parent) {
        disc[u] = low[u] = timer++;
        int children = 0;
        g.adj[u].for_each([&](int v) {
            if (disc[v] == -1) {
                ++children;
                dfs(v, u);
                low[u] = std::min(low[u], low[v]);
                if (parent != -1 && low[v] >= disc[u]) is_cut[u] = 1;
                if (low[v] > disc[u]) bridges.emplace_back(std::min(u, v), std::max(u, v));
            } else if (v != parent) {
                low[u] = std::min(low[u], disc[v]);
            }
        });
        if (parent == -1 && children > 1) is_cut[u] = 1;
    }

    void run() {
        for (int v = 0; v < g.n; ++v)
            if (disc[v] == -1) dfs(v, -1);
    }
};

}  // namespace

std::vector<int> cut_vertices(const SimpleGraph& g) {
    LowLink ll(g);
    ll.run();
    std::vector<int> out;
    for (int v = 0; v < g.n; ++v)
        if (ll.is_cut[v]) out.push_back(v);
    return out;
}

std::vector<std::pair<int, int>> cut_edges(const SimpleGraph& g) {
    LowLink ll(g);
    ll.run();
    std::sort(ll.bridges.begin(), ll.bridges.end());
    return ll.bridges;
}

// ---------------------------------------------------------------------------
// Hamiltonicity: exact backtracking with independence/cut pruning.

namespace {

bool ham_dfs(const SimpleGraph& g, std::vector<int>& path, Bitset& visited) {
    int last = path.back();
    if (int(path.size()) == g.n)
        return g.has_edge(last, path.front());
    // Every unvisited vertex must keep at least two usable connections, and
    // the unvisited set together with the endpoints must stay connected.
    Bitset unvisited(g.n);
    for (int v = 0; v < g.n; ++v)
        if (!visited.test(v)) unvisited.set(v);
    bool feasible = true;
    unvisited.for_each([&](int v) {
        if (!feasible) return;
        Bitset open = g.adj[v] & unvisited;
        int d = open.count();
        if (g.adj[v].test(last)) ++d;
        if (g.adj[v].test(path.front())) ++d;
        if (d < 2) feasible = false;
    });
    if (!feasible) return false;
    // Connectivity of unvisited + endpoint.
    {
        Bitset reach(g.n);
        std::deque<int> q;
        Bitset frontier = g.adj[last] & unvisited;
        frontier.for_each([&](int v) {
            reach.set(v);
            q.push_back(v);
        });
        if (!frontier.any()) return false;
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            (g.adj[u] & unvisited).for_each([&](int v) {
                if (!reach.test(v)) {
                    reach.set(v);
                    q.push_back(v);
                }
            });
        }
        if (reach.count() != unvisited.count()) return false;
    }
    for (int v = g.adj[last].first(); v != -1; v = g.adj[last].next(v)) {
        if (visited.test(v)) continue;
        visited.set(v);
        path.push_back(v);
        if (ham_dfs(g, path, visited)) return true;
        path.pop_back();
        visited.reset(v);
    }
    return false;
}

}  // namespace

bool is_hamiltonian(const SimpleGraph& g, int cap) {
    if (g.n > cap) throw CapExceeded("is_hamiltonian: n=" + std::to_string(g.n) +
                                     " exceeds cap " + std::to_string(cap));
    if (g.n <= 2) return false;
    if (!is_connected(g)) return false;
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) < 2) return false;
    if (!cut_vertices(g).empty()) return false;
    // An independent set in a spanning cycle has size at most n/2.
    if (independence_number(g, g.n) * 2 > g.n) return false;
    std::vector<int> path{0};
    Bitset visited(g.n);
    visited.set(0);
    return ham_dfs(g, path, visited);
}

// ---------------------------------------------------------------------------
// Perfectness: by the strong perfect graph theorem, search induced odd
// cycles of length >= 5 in the graph and in its complement.

namespace {

struct HoleSearch {
    const SimpleGraph& g;
    std::vector<int> path;

    explicit HoleSearch(const SimpleGraph& graph) : g(graph) {}

    // blocked_ext: vertices unusable as extensions (path vertices, vertices
    // <= path[0], and neighbors of every path vertex except the last).
    // blocked_close: path vertices, vertices <= path[0], and neighbors of
    // the internal path vertices path[1..k-1].
    bool dfs(const Bitset& blocked_ext, const Bitset& blocked_close) {
        int v0 = path.front(), last = path.back();
        if (path.size() >= 4) {
            Bitset close = (g.adj[last] & g.adj[v0]).minus(blocked_close);
            bool found = false;
            close.for_each([&](int w) {
                if (found) return;
                if ((path.size() + 1) % 2 == 1 && w > path[1]) found = true;
            });
            if (found) return true;
        }
        Bitset ext = g.adj[last].minus(blocked_ext);
        for (int w = ext.first(); w != -1; w = ext.next(w)) {
            path.push_back(w);
            Bitset be = blocked_ext | g.adj[last];
            be.set(w);
            Bitset bc = blocked_close | g.adj[last];
            bc.set(w);
            if (dfs(be, bc)) return true;
            path.pop_back();
        }
        return false;
    }

    bool run() {
        for (int v = 0; v < g.n; ++v) {
            Bitset low(g.n);
            for (int i = 0; i <= v; ++i) low.set(i);
            for (int x = g.adj[v].next(v); x != -1; x = g.adj[v].next(x)) {
                path = {v, x};
                Bitset be = low | g.adj[v];
                be.set(x);
                Bitset bc = low;
                bc.set(x);
                if (dfs(be, bc)) return true;
            }
        }
        return false;
    }
};

}  // namespace

bool has_odd_hole(const SimpleGraph& g) { return HoleSearch(g).run(); }

bool is_perfect(const SimpleGraph& g, int cap) {
    if (g.n > cap) throw CapExceeded("is_perfect: n=" + std::to_string(g.n) +
                                     " exceeds cap " + std::to_string(cap));
    return !has_odd_hole(g) && !has_odd_hole(complement(g));
}

// ---------------------------------------------------------------------------

InvariantReport compute_invariants(const SimpleGraph& g, const Caps& caps) {
    InvariantReport r;
    auto note = [&](const std::string& field, const std::string& what) {
        r.method_notes.emplace_back(field, what);
    };
    auto guarded = [&](const std::string& field, auto&& fn) {
        try {
            fn();
            note(field, "exact");
        } catch (const CapExceeded&) {
            note(field, "skipped(cap)");
        }
    };
    guarded("clique_number", [&] { r.clique_number = clique_number(g, caps.solver_cap); });
    guarded("chromatic_number", [&] { r.chromatic_number = chromatic_number(g, caps.solver_cap); });
    guarded("independence_number",
            [&] { r.independence_number = independence_number(g, caps.solver_cap); });
    guarded("vertex_connectivity",
            [&] { r.vertex_connectivity = vertex_connectivity(g, caps.solver_cap); });
    auto gi = girth(g);
    r.girth = gi;
    r.girth_infinite = !gi.has_value();
    note("girth", "exact");
    auto di = diameter(g);
    r.diameter = di;
    r.diameter_infinite = !di.has_value();
    note("diameter", "exact");
    r.component_count = int(components(g).size());
    note("component_count", "exact");
    r.cut_vertices = cut_vertices(g);
    r.cut_edges = cut_edges(g);
    note("cut_vertices", "exact");
    note("cut_edges", "exact");
    guarded("is_hamiltonian", [&] { r.is_hamiltonian = is_hamiltonian(g, caps.hamiltonian_cap); });
    guarded("is_perfect", [&] { r.is_perfect = is_perfect(g, caps.perfect_cap); });
    return r;
}

std::string InvariantReport::to_json() const {
    nlohmann::json j;
    auto put = [&](const char* key, const std::optional<int>& v) {
        if (v) j[key] = *v;
        else j[key] = "skipped";
    };
    put("clique_number", clique_number);
    put("chromatic_number", chromatic_number);
    put("independence_number", independence_number);
    put("vertex_connectivity", vertex_connectivity);
    j["girth"] = girth_infinite ? nlohmann::json("inf") : nlohmann::json(*girth);
    j["diameter"] = diameter_infinite ? nlohmann::json("inf") : nlohmann::json(*diameter);
    j["component_count"] = component_count;
    j["cut_vertices"] = cut_vertices;
    auto ce = nlohmann::json::array();
    for (auto [u, v] : cut_edges) ce.push_back({u, v});
    j["cut_edges"] = ce;
    if (is_hamiltonian) j["is_hamiltonian"] = *is_hamiltonian;
    else j["is_hamiltonian"] = "skipped";
    if (is_perfect) j["is_perfect"] = *is_perfect;
    else j["is_perfect"] = "skipped";
    nlohmann::json notes;
    for (const auto& [k, v] : method_notes) notes[k] = v;
    j["method_notes"] = notes;
    return j.dump(2);
}

std::string InvariantReport::to_table() const {
    std::ostringstream os;
    auto line = [&](const std::string& k, const std::string& v) {
        os << k;
        for (size_t i = k.size(); i < 22; ++i) os << ' ';
        os << v << '\n';
    };
    auto opt = [](const std::optional<int>& v) {
        return v ? std::to_string(*v) : std::string("skipped");
    };
    line("clique_number", opt(clique_number));
    line("chromatic_number", opt(chromatic_number));
    line("independence_number", opt(independence_number));
    line("vertex_connectivity", opt(vertex_connectivity));
    line("girth", girth_infinite ? "inf" : std::to_string(*girth));
    line("diameter", diameter_infinite ? "inf" : std::to_string(*diameter));
    line("component_count", std::to_string(component_count));
    std::ostringstream cv;
    for (int v : cut_vertices) cv << v << ' ';
    line("cut_vertices", cut_vertices.empty() ? "none" : cv.str());
    std::ostringstream cee;
    for (auto [u, v] : cut_edges) cee << u << '-' << v << ' ';
    line("cut_edges", cut_edges.empty() ? "none" : cee.str());
    line("is_hamiltonian", is_hamiltonian ? (*is_hamiltonian ? "true" : "false") : "skipped");
    line("is_perfect", is_perfect ? (*is_perfect ? "true" : "false") : "skipped");
    return os.str();
}

}  // namespace rpg
