#include "power.hpp"

#include <numeric>

#include "errors.hpp"

namespace rpg {

namespace {

// Is <x> properly contained in <y>? Size check first, then bitmask subset.
bool proper_sub(const CyclicSubgroupLattice& lat, int x, int y) {
    return lat.orders[x] < lat.orders[y] && lat.gen_mask[x].is_subset_of(lat.gen_mask[y]);
}

bool sub_eq(const CyclicSubgroupLattice& lat, int x, int y) {
    return lat.orders[x] <= lat.orders[y] && lat.gen_mask[x].is_subset_of(lat.gen_mask[y]);
}

std::vector<int> vertex_list(int n, bool proper) {
    std::vector<int> verts;
    for (int i = proper ? 1 : 0; i < n; ++i) verts.push_back(i);
    return verts;
}

std::vector<std::string> vertex_labels(const FiniteGroup& g, const std::vector<int>& verts) {
    std::vector<std::string> labels;
    labels.reserve(verts.size());
    for (int v : verts) labels.push_back(g.element_labels()[v]);
    return labels;
}

}  // namespace

SimpleGraph build_power_graph(const FiniteGroup& g, const CyclicSubgroupLattice& lat,
                              const GraphVariant& var) {
    auto verts = vertex_list(g.order(), var.proper);
    SimpleGraph out(int(verts.size()));
    out.labels = vertex_labels(g, verts);
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j) {
            int u = verts[i], v = verts[j];
            bool edge = var.reduced
                            ? (proper_sub(lat, u, v) || proper_sub(lat, v, u))
                            : (sub_eq(lat, u, v) || sub_eq(lat, v, u));
            if (edge) out.add_edge(int(i), int(j));
        }
    return out;
}

SimpleGraph build_power_graph(const FiniteGroup& g, const GraphVariant& v) {
    return build_power_graph(g, compute_lattice(g), v);
}

DiGraph build_power_digraph(const FiniteGroup& g, const CyclicSubgroupLattice& lat,
                            const GraphVariant& var) {
    auto verts = vertex_list(g.order(), var.proper);
    DiGraph out(int(verts.size()));
    out.labels = vertex_labels(g, verts);
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = 0; j < verts.size(); ++j) {
            if (i == j) continue;
            int u = verts[i], v = verts[j];
            bool arc = var.reduced ? proper_sub(lat, v, u)
                                   : (v != u && lat.gen_mask[u].test(v));
            if (arc) out.add_arc(int(i), int(j));
        }
    return out;
}

DiGraph build_power_digraph(const FiniteGroup& g, const GraphVariant& v) {
    return build_power_digraph(g, compute_lattice(g), v);
}

namespace {

// Order of residue k in Z_m and cyclic-subgroup inclusion by divisibility.
int cyclic_order(int m, int k) { return m / std::gcd(m, k); }

// RP adjacency inside the cyclic subgroup <a> of order m, placed at
// vertex indices 0..m-1, derived purely from order divisibility.
void add_cyclic_rp_edges(SimpleGraph& g, int m) {
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            int oi = cyclic_order(m, i), oj = cyclic_order(m, j);
            if (oi == oj) continue;
            if (oi % oj == 0 || oj % oi == 0) g.add_edge(i, j);
        }
}

}  // namespace

KnownDecomposition decompose_known(const FiniteGroup& g) {
    KnownDecomposition d;
    int n = g.family_param;
    switch (g.family) {
        case GroupFamily::Dihedral: {
            // K_1 + (RP*(Z_n) U complement-of-K_n): identity joined to all,
            // cyclic part carries RP(Z_n), the n reflections are pendant to e.
            int N = 2 * n;
            d.expression = "K1 + (RP*(Z" + std::to_string(n) + ") U ~K" + std::to_string(n) + ")";
            d.predicted = SimpleGraph(N);
            add_cyclic_rp_edges(d.predicted, n);
            for (int v = 1; v < N; ++v) d.predicted.add_edge(0, v);
            break;
        }
        case GroupFamily::Quaternion: {
            // Cyclic part RP(Z_{2n}); each outer element a^i b has
            // <a^i b> = {e, a^n, a^i b, a^{i+n} b}, maximal, so it is
            // adjacent exactly to e and the central involution a^n.
            int m = 2 * n, N = 4 * n;
            d.expression = "RP(Z" + std::to_string(m) + ") with 2n order-4 outer elements joined to {e, a^n}";
            d.predicted = SimpleGraph(N);
            add_cyclic_rp_edges(d.predicted, m);
            for (int v = 1; v < m; ++v) d.predicted.add_edge(0, v);
            for (int i = 0; i < m; ++i) {
                d.predicted.add_edge(0, m + i);
                d.predicted.add_edge(n, m + i);
            }
            break;
        }
        case GroupFamily::Semidihedral: {
            // Cyclic part RP(Z_{4n}); a^k b with k even is an involution in a
            // maximal subgroup of order 2 (pendant to e); a^k b with k odd has
            // order 4 with square a^{2n}, adjacent exactly to e and a^{2n}.
            int m = 4 * n, N = 8 * n;
            d.expression = "RP(Z" + std::to_string(m) +
                           ") with 2n involutions pendant to e and 2n order-4 elements joined to {e, a^" +
                           std::to_string(2 * n) + "}";
            d.predicted = SimpleGraph(N);
            add_cyclic_rp_edges(d.predicted, m);
            for (int v = 1; v < m; ++v) d.predicted.add_edge(0, v);
            for (int k = 0; k < m; ++k) {
                d.predicted.add_edge(0, m + k);
                if (k % 2 == 1) d.predicted.add_edge(2 * n, m + k);
            }
            break;
        }
        default:
            throw UnsupportedFamily("decompose_known supports D/Q/SD families only");
    }
    d.predicted.labels = g.element_labels();
    return d;
}

}  // namespace rpg
