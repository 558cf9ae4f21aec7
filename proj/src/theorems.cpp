#include "theorems.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace rpg {

// ---------------------------------------------------------------------------
// GroupContext

const CyclicSubgroupLattice& GroupContext::lattice() {
    if (!lat_) lat_ = compute_lattice(g_);
    return *lat_;
}

const ElementOrderProfile& GroupContext::profile() {
    if (!prof_) prof_ = order_profile(g_);
    return *prof_;
}

const SimpleGraph& GroupContext::graph(bool reduced, bool proper) {
    auto& slot = graphs_[reduced ? 1 : 0][proper ? 1 : 0];
    if (!slot) {
        GraphVariant v;
        v.reduced = reduced;
        v.proper = proper;
        v.directed = false;
        slot = build_power_graph(g_, lattice(), v);
    }
    return *slot;
}

bool GroupContext::cyclic() {
    if (!cyclic_) cyclic_ = g_.is_cyclic();
    return *cyclic_;
}

bool GroupContext::abelian() {
    if (!abelian_) abelian_ = g_.is_abelian();
    return *abelian_;
}

bool GroupContext::p_group() const { return factorize(g_.order()).size() == 1; }

int GroupContext::involution_count() const {
    int c = 0;
    for (int o : g_.element_orders())
        if (o == 2) ++c;
    return c;
}

bool GroupContext::quaternion_q8() {
    return g_.order() == 8 && !cyclic() && involution_count() == 1;
}

bool GroupContext::generalized_quaternion() {
    int n = g_.order();
    if (n < 8 || (n & (n - 1)) != 0) return false;
    return !cyclic() && involution_count() == 1;
}

// ---------------------------------------------------------------------------
// Check helpers

namespace {

struct Acc {
    bool ok = true;
    std::string bad;
    void check(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            if (!bad.empty()) bad += "; ";
            bad += what;
        }
    }
};

std::string b2s(bool b) { return b ? "true" : "false"; }

std::string opt_str(const std::optional<int>& v) {
    return v ? std::to_string(*v) : std::string("inf");
}

TheoremCheckResult finish(const std::string& id, GroupContext& ctx, const Acc& acc,
                          const std::string& expected, const std::string& note = "") {
    TheoremCheckResult r;
    r.check_id = id;
    r.group = ctx.group().label();
    r.status = acc.ok ? CheckStatus::Pass : CheckStatus::Fail;
    r.expected = expected;
    r.computed = acc.ok ? "as expected" : "violated";
    r.witness = acc.bad;
    r.note = note;
    return r;
}

TheoremCheckResult skipped(const std::string& id, GroupContext& ctx, const std::string& why) {
    TheoremCheckResult r;
    r.check_id = id;
    r.group = ctx.group().label();
    r.status = CheckStatus::Skipped;
    r.note = why;
    return r;
}

// pi_e(G) within {1, 4} plus primes.
bool pi_in_14P(GroupContext& ctx) {
    for (int o : ctx.profile().pi_e)
        if (o != 1 && o != 4 && !is_prime(o)) return false;
    return true;
}

bool all_prime_order(GroupContext& ctx) {
    for (int o : ctx.profile().pi_e)
        if (o != 1 && !is_prime(o)) return false;
    return true;
}

// Is <z> a maximal cyclic subgroup?
bool generates_maximal(GroupContext& ctx, int z) {
    const auto& lat = ctx.lattice();
    for (const auto& cls : lat.classes) {
        int r = cls[0];
        if (lat.orders[z] < lat.orders[r] && lat.gen_mask[z].is_subset_of(lat.gen_mask[r]))
            return false;
    }
    return true;
}

// All pairs of distinct cyclic subgroups of order 4 intersect trivially.
bool order4_intersect_trivially(GroupContext& ctx) {
    const auto& lat = ctx.lattice();
    std::vector<const Bitset*> subs;
    for (const auto& cls : lat.classes)
        if (lat.orders[cls[0]] == 4) subs.push_back(&lat.gen_mask[cls[0]]);
    for (size_t i = 0; i < subs.size(); ++i)
        for (size_t j = i + 1; j < subs.size(); ++j)
            if ((*subs[i] & *subs[j]).count() > 1) return false;
    return true;
}

bool two_connected(const SimpleGraph& g) {
    return g.n >= 3 && is_connected(g) && cut_vertices(g).empty();
}

// Cyclic-of-order-n recognizers used by the classification checks.
bool is_cyclic_of(GroupContext& ctx, std::function<bool(long)> order_pred) {
    return ctx.cyclic() && order_pred(ctx.group().order());
}

bool order_is_prime_squared(long n) {
    auto f = factorize(n);
    return f.size() == 1 && f[0].second == 2;
}

bool order_is_pq(long n) {
    auto f = factorize(n);
    return f.size() == 2 && f[0].second == 1 && f[1].second == 1;
}

// α(RP(Z_m)) computed on a freshly built cyclic group.
int alpha_rp_cyclic(int m, const Caps& caps) {
    FiniteGroup z = build_group("Z" + std::to_string(m), caps);
    GraphVariant v;
    v.reduced = true;
    return independence_number(build_power_graph(z, v), caps.solver_cap);
}

}  // namespace

// ---------------------------------------------------------------------------
// Registry

const std::vector<TheoremCheck>& check_registry() {
    static const std::vector<TheoremCheck> checks = [] {
        std::vector<TheoremCheck> reg;

        reg.push_back({"T1", "order-partition is a proper coloring and the divisor chain is a clique",
                       [](GroupContext& ctx) {
                           Acc a;
                           const auto& g = ctx.group();
                           const auto& prof = ctx.profile();
                           const SimpleGraph& rps = ctx.graph(true, true);
                           int omega = prof.omega_max;
                           for (auto [u, v] : rps.edges()) {
                               int ou = big_omega(g.element_order(u + 1));
                               int ov = big_omega(g.element_order(v + 1));
                               a.check(ou != ov, "adjacent vertices " + std::to_string(u + 1) + "," +
                                                     std::to_string(v + 1) + " share a class");
                           }
                           for (int x = 1; x < g.order(); ++x) {
                               int w = big_omega(g.element_order(x));
                               a.check(w >= 1 && w <= omega, "class index out of range at " +
                                                                 std::to_string(x));
                           }
                           // Greedy chain: cumulative prime products dividing o(witness).
                           int x = prof.witness;
                           const auto& lat = ctx.lattice();
                           std::vector<long> primes;
                           for (auto [p, e] : factorize(g.element_order(x)))
                               for (int i = 0; i < e; ++i) primes.push_back(p);
                           std::vector<int> chain;
                           long target = 1;
                           for (long p : primes) {
                               target *= p;
                               int found = -1;
                               for (int y : lat.gen_subgroup[x])
                                   if (lat.orders[y] == target) {
                                       found = y;
                                       break;
                                   }
                               a.check(found != -1, "no element of order " + std::to_string(target) +
                                                        " in the witness subgroup");
                               if (found != -1) chain.push_back(found);
                           }
                           for (size_t i = 0; i < chain.size(); ++i)
                               for (size_t j = i + 1; j < chain.size(); ++j)
                                   a.check(rps.has_edge(chain[i] - 1, chain[j] - 1),
                                           "chain elements not adjacent");
                           return finish("T1", ctx, a,
                                         "X_i classes color RP* with Omega(n) colors; chain is a clique");
                       }});

        reg.push_back({"T2", "omega = chi = Omega(n) on RP*, and Omega(n)+1 on RP",
                       [](GroupContext& ctx) {
                           Acc a;
                           int omega = ctx.profile().omega_max;
                           const Caps& caps = ctx.caps();
                           const SimpleGraph& rps = ctx.graph(true, true);
                           const SimpleGraph& rp = ctx.graph(true, false);
                           int w1 = clique_number(rps, caps.solver_cap);
                           int c1 = chromatic_number(rps, caps.solver_cap);
                           int w2 = clique_number(rp, caps.solver_cap);
                           int c2 = chromatic_number(rp, caps.solver_cap);
                           a.check(w1 == omega, "omega(RP*)=" + std::to_string(w1));
                           a.check(c1 == omega, "chi(RP*)=" + std::to_string(c1));
                           a.check(w2 == omega + 1, "omega(RP)=" + std::to_string(w2));
                           a.check(c2 == omega + 1, "chi(RP)=" + std::to_string(c2));
                           return finish("T2", ctx, a, "Omega(n)=" + std::to_string(omega) +
                                                           " on RP*, +1 on RP");
                       }});

        reg.push_back({"T3", "cyclic groups maximize clique and chromatic numbers at fixed order",
                       [](GroupContext& ctx) {
                           if (ctx.cyclic()) return skipped("T3", ctx, "applies to non-cyclic groups");
                           Acc a;
                           const Caps& caps = ctx.caps();
                           FiniteGroup zn = build_group("Z" + std::to_string(ctx.group().order()), caps);
                           GroupContext zc(zn, caps);
                           for (bool proper : {false, true}) {
                               const SimpleGraph& mine = ctx.graph(true, proper);
                               const SimpleGraph& zg = zc.graph(true, proper);
                               std::string tag = proper ? "RP*" : "RP";
                               a.check(clique_number(mine, caps.solver_cap) <
                                           clique_number(zg, caps.solver_cap),
                                       "omega(" + tag + ") not below cyclic bound");
                               a.check(chromatic_number(mine, caps.solver_cap) <
                                           chromatic_number(zg, caps.solver_cap),
                                       "chi(" + tag + ") not below cyclic bound");
                           }
                           return finish("T3", ctx, a, "strict inequalities vs Z_n");
                       }});

        reg.push_back({"T4", "RP* bipartite iff the maximal-Omega element order is p^2 or pq",
                       [](GroupContext& ctx) {
                           Acc a;
                           const SimpleGraph& rps = ctx.graph(true, true);
                           int omega = ctx.profile().omega_max;
                           bool bip = classify_shape(rps).is_bipartite;
                           bool has_edge = rps.edge_count() > 0;
                           a.check(bip == (omega <= 2),
                                   "2-colorable=" + b2s(bip) + " but Omega_max=" + std::to_string(omega));
                           a.check((bip && has_edge) == (omega == 2),
                                   "nonempty bipartite=" + b2s(bip && has_edge));
                           return finish("T4", ctx, a, "bipartite with an edge iff Omega_max = 2",
                                         "equivalently: some element order is p^2 or pq and none "
                                         "has three or more prime factors");
                       }});

        reg.push_back({"T5", "triangle-freeness by Omega bounds",
                       [](GroupContext& ctx) {
                           Acc a;
                           int omega = ctx.profile().omega_max;
                           bool tf_s = classify_shape(ctx.graph(true, true)).is_triangle_free;
                           bool tf = classify_shape(ctx.graph(true, false)).is_triangle_free;
                           a.check(tf_s == (omega <= 2), "RP* triangle-free=" + b2s(tf_s));
                           a.check(tf == (omega <= 1), "RP triangle-free=" + b2s(tf));
                           return finish("T5", ctx, a,
                                         "RP* triangle-free iff Omega<=2; RP iff all orders prime");
                       }});

        reg.push_back({"T6", "complete multipartite classification with part sizes",
                       [](GroupContext& ctx) {
                           Acc a;
                           const auto& g = ctx.group();
                           auto shape_s = classify_shape(ctx.graph(true, true));
                           auto shape_f = classify_shape(ctx.graph(true, false));
                           bool cb = shape_s.multipartite && shape_s.multipartite->size() == 2;
                           bool want_cb = is_cyclic_of(ctx, order_is_prime_squared) ||
                                          is_cyclic_of(ctx, order_is_pq) || ctx.quaternion_q8();
                           a.check(cb == want_cb, "RP* complete bipartite=" + b2s(cb));
                           bool ck = shape_s.multipartite && shape_s.multipartite->size() >= 3;
                           bool want_ck = ctx.cyclic() && ctx.p_group() &&
                                          big_omega(g.order()) >= 3;
                           a.check(ck == want_ck, "RP* complete k-partite (k>=3)=" + b2s(ck));
                           // RP = K_1 + RP*, so RP is complete k-partite (k >= 3)
                           // exactly when RP* is complete (k-1)-partite: the
                           // prime-power cyclic family plus the k = 3
                           // exceptional cases Z_{pq} and Q_8.
                           bool fk = shape_f.multipartite && shape_f.multipartite->size() >= 3;
                           bool want_fk = want_cb ||
                                          (ctx.cyclic() && ctx.p_group() && big_omega(g.order()) >= 2);
                           a.check(fk == want_fk, "RP complete k-partite (k>=3)=" + b2s(fk));
                           if (ctx.cyclic() && ctx.p_group() && big_omega(g.order()) >= 2) {
                               // Eq-style part sizes for Z_{p^k}: p^{i-1}(p-1), i = 1..k.
                               long p = factorize(g.order())[0].first;
                               int k = big_omega(g.order());
                               std::vector<int> want;
                               long sz = p - 1;
                               for (int i = 0; i < k; ++i) {
                                   want.push_back(int(sz));
                                   sz *= p;
                               }
                               std::sort(want.begin(), want.end());
                               a.check(shape_s.multipartite && *shape_s.multipartite == want,
                                       "RP* part sizes mismatch for prime power order");
                           }
                           return finish("T6", ctx, a,
                                         "complete bipartite iff Z_{p^2}, Z_{pq} or Q_8; k>=3 iff Z_{p^k}");
                       }});

        reg.push_back({"T7", "RP* is a tree iff a star iff G is Z_4 or Q_8",
                       [](GroupContext& ctx) {
                           Acc a;
                           auto shape = classify_shape(ctx.graph(true, true));
                           bool nontrivial = ctx.graph(true, true).n >= 2;
                           bool tree = shape.is_tree && nontrivial;
                           bool star = shape.is_star && nontrivial;
                           bool want = (ctx.cyclic() && ctx.group().order() == 4) || ctx.quaternion_q8();
                           a.check(tree == want, "tree=" + b2s(tree));
                           a.check(star == want, "star=" + b2s(star));
                           a.check(tree == star, "tree/star disagree");
                           return finish("T7", ctx, a, "tree iff star iff Z_4 or Q_8",
                                         "the single-vertex RP* of Z_2 is treated as a degenerate "
                                         "tree and excluded, matching the two-pendant argument");
                       }});

        reg.push_back({"T8", "girth of RP* by the three branches; girth of RP",
                       [](GroupContext& ctx) {
                           Acc a;
                           int omega = ctx.profile().omega_max;
                           std::optional<int> want;
                           if (omega >= 3) want = 3;
                           else if (omega == 2 && !pi_in_14P(ctx)) want = 4;
                           else want = std::nullopt;
                           auto got = girth(ctx.graph(true, true));
                           a.check(got == want, "gr(RP*)=" + opt_str(got) + " want " + opt_str(want));
                           auto got_f = girth(ctx.graph(true, false));
                           bool tf = classify_shape(ctx.graph(true, false)).is_triangle_free;
                           std::optional<int> want_f = tf ? std::nullopt : std::optional<int>(3);
                           a.check(got_f == want_f, "gr(RP)=" + opt_str(got_f));
                           return finish("T8", ctx, a, "gr(RP*) in {3,4,inf} by Omega and pi_e",
                                         "the branch condition is read as pi_e contained in {1,4} u P");
                       }});

        reg.push_back({"T9", "RP and RP* are perfect and weakly chi-perfect",
                       [](GroupContext& ctx) {
                           const Caps& caps = ctx.caps();
                           if (ctx.group().order() > caps.perfect_cap)
                               return skipped("T9", ctx, "order above perfectness cap");
                           Acc a;
                           for (bool proper : {false, true}) {
                               const SimpleGraph& g = ctx.graph(true, proper);
                               std::string tag = proper ? "RP*" : "RP";
                               a.check(is_perfect(g, caps.perfect_cap), tag + " not perfect");
                               a.check(clique_number(g, caps.solver_cap) ==
                                           chromatic_number(g, caps.solver_cap),
                                       tag + " omega != chi");
                           }
                           return finish("T9", ctx, a, "no odd holes/antiholes; omega = chi");
                       }});

        reg.push_back({"T10", "acyclicity of RP* and RP with the classification clause",
                       [](GroupContext& ctx) {
                           Acc a;
                           bool ac_s = classify_shape(ctx.graph(true, true)).is_acyclic;
                           a.check(ac_s == pi_in_14P(ctx), "RP* acyclic=" + b2s(ac_s));
                           bool ac_f = classify_shape(ctx.graph(true, false)).is_acyclic;
                           bool prime_orders = all_prime_order(ctx);
                           a.check(ac_f == prime_orders, "RP acyclic=" + b2s(ac_f));
                           // Classification clause on the catalog: prime orders iff p-group of
                           // exponent p or non-nilpotent of order p^n q with orders in {p, q}.
                           bool nil = is_nilpotent(ctx.group());
                           bool expo_p = ctx.p_group() && prime_orders;
                           auto f = factorize(ctx.group().order());
                           bool pnq = f.size() == 2 && (f[0].second == 1 || f[1].second == 1);
                           bool klass = expo_p || (!nil && pnq && prime_orders);
                           a.check(prime_orders == klass, "group classification clause");
                           return finish("T10", ctx, a,
                                         "RP* acyclic iff pi_e within {1,4} u P; RP iff prime orders");
                       }});

        reg.push_back({"T11", "abelian acyclicity classification",
                       [](GroupContext& ctx) {
                           if (!ctx.abelian()) return skipped("T11", ctx, "applies to abelian groups");
                           Acc a;
                           const auto& pi = ctx.profile().pi_e;
                           int expo = pi.back();
                           bool elem_abelian = is_prime(expo);  // abelian + exponent p => Z_p^n
                           bool four_family = expo == 4;        // abelian + exponent 4 => Z_4^m x Z_2^n
                           bool ac_s = classify_shape(ctx.graph(true, true)).is_acyclic;
                           a.check(ac_s == (elem_abelian || four_family), "RP* acyclic=" + b2s(ac_s));
                           bool ac_f = classify_shape(ctx.graph(true, false)).is_acyclic;
                           a.check(ac_f == elem_abelian, "RP acyclic=" + b2s(ac_f));
                           return finish("T11", ctx, a,
                                         "RP* acyclic iff Z_p^n, Z_4^n or Z_4^m x Z_2^n; RP iff Z_p^n");
                       }});

        reg.push_back({"T12", "RP claw-free iff Z_2, Z_3 or Z_4",
                       [](GroupContext& ctx) {
                           Acc a;
                           bool cf = classify_shape(ctx.graph(true, false)).is_claw_free;
                           long n = ctx.group().order();
                           bool want = ctx.cyclic() && (n == 2 || n == 3 || n == 4);
                           a.check(cf == want, "claw-free=" + b2s(cf));
                           return finish("T12", ctx, a, "claw-free iff cyclic of order 2, 3 or 4");
                       }});

        reg.push_back({"T13", "RP* claw-free iff pi_e within {1,4} u P and order-4 subgroups meet trivially",
                       [](GroupContext& ctx) {
                           Acc a;
                           bool cf = classify_shape(ctx.graph(true, true)).is_claw_free;
                           bool want = pi_in_14P(ctx) && order4_intersect_trivially(ctx);
                           a.check(cf == want, "claw-free=" + b2s(cf));
                           return finish("T13", ctx, a, "claw-freeness of RP*");
                       }});

        reg.push_back({"T14", "neither RP nor RP* is a cycle",
                       [](GroupContext& ctx) {
                           Acc a;
                           a.check(!classify_shape(ctx.graph(true, false)).is_cycle, "RP is a cycle");
                           a.check(!classify_shape(ctx.graph(true, true)).is_cycle, "RP* is a cycle");
                           return finish("T14", ctx, a, "no reduced power graph is a cycle");
                       }});

        reg.push_back({"T15", "cut vertices of degree >= 3 agree between RP* and P*",
                       [](GroupContext& ctx) {
                           Acc a;
                           const SimpleGraph& rps = ctx.graph(true, true);
                           const SimpleGraph& ps = ctx.graph(false, true);
                           auto cut_r = cut_vertices(rps);
                           auto cut_p = cut_vertices(ps);
                           auto has = [](const std::vector<int>& v, int x) {
                               return std::find(v.begin(), v.end(), x) != v.end();
                           };
                           for (int v = 0; v < rps.n; ++v) {
                               if (rps.degree(v) < 3) continue;
                               a.check(has(cut_r, v) == has(cut_p, v),
                                       "element " + std::to_string(v + 1) + " disagrees");
                           }
                           return finish("T15", ctx, a, "cut-vertex equivalence at degree >= 3");
                       }});

        reg.push_back({"T16", "every cut vertex of RP* and of P* has order 2",
                       [](GroupContext& ctx) {
                           Acc a;
                           const auto& g = ctx.group();
                           for (bool reduced : {true, false}) {
                               for (int v : cut_vertices(ctx.graph(reduced, true)))
                                   a.check(g.element_order(v + 1) == 2,
                                           std::string(reduced ? "RP*" : "P*") + " cut vertex " +
                                               std::to_string(v + 1) + " has order " +
                                               std::to_string(g.element_order(v + 1)));
                           }
                           return finish("T16", ctx, a, "cut vertices are involutions");
                       }});

        reg.push_back({"T17", "cyclic: RP* has a cut vertex iff G is Z_4",
                       [](GroupContext& ctx) {
                           if (!ctx.cyclic()) return skipped("T17", ctx, "applies to cyclic groups");
                           Acc a;
                           bool has_cut = !cut_vertices(ctx.graph(true, true)).empty();
                           a.check(has_cut == (ctx.group().order() == 4), "cut vertex=" + b2s(has_cut));
                           return finish("T17", ctx, a, "cut vertex iff order 4");
                       }});

        reg.push_back({"T18", "cut-edge characterizations for RP* and RP",
                       [](GroupContext& ctx) {
                           Acc a;
                           auto is_max4 = [&](int z) {
                               return ctx.group().element_order(z) == 4 && generates_maximal(ctx, z);
                           };
                           auto is_maxp = [&](int z) {
                               return is_prime(ctx.group().element_order(z)) &&
                                      generates_maximal(ctx, z);
                           };
                           {
                               const SimpleGraph& rps = ctx.graph(true, true);
                               auto bridges = cut_edges(rps);
                               for (auto [u, v] : rps.edges()) {
                                   bool is_bridge = std::binary_search(
                                       bridges.begin(), bridges.end(), std::make_pair(u, v));
                                   bool want = is_max4(u + 1) || is_max4(v + 1);
                                   a.check(is_bridge == want,
                                           "RP* edge " + std::to_string(u + 1) + "-" +
                                               std::to_string(v + 1) + " bridge=" + b2s(is_bridge));
                               }
                               if (ctx.cyclic())
                                   a.check(!bridges.empty() == (ctx.group().order() == 4),
                                           "RP*(Z_n) cut-edge corollary");
                           }
                           {
                               const SimpleGraph& rp = ctx.graph(true, false);
                               auto bridges = cut_edges(rp);
                               for (auto [u, v] : rp.edges()) {
                                   bool is_bridge = std::binary_search(
                                       bridges.begin(), bridges.end(), std::make_pair(u, v));
                                   bool want = (u != 0 && is_maxp(u)) || (v != 0 && is_maxp(v));
                                   a.check(is_bridge == want,
                                           "RP edge " + std::to_string(u) + "-" + std::to_string(v) +
                                               " bridge=" + b2s(is_bridge));
                               }
                               if (ctx.cyclic())
                                   a.check(!bridges.empty() == is_prime(ctx.group().order()),
                                           "RP(Z_n) cut-edge corollary");
                           }
                           return finish("T18", ctx, a,
                                         "bridges have an endpoint generating a maximal cyclic "
                                         "subgroup of order 4 (RP*) / prime order (RP)",
                                         "the Z_4 clause is read as: the generated subgroup is "
                                         "maximal cyclic of order 4");
                       }});

        reg.push_back({"T19", "connectivity formulas for RP(Z_n) and RP*(Z_n)",
                       [](GroupContext& ctx) {
                           if (!ctx.cyclic()) return skipped("T19", ctx, "applies to cyclic groups");
                           Acc a;
                           const Caps& caps = ctx.caps();
                           long n = ctx.group().order();
                           long phi = euler_phi(n);
                           int k_full = vertex_connectivity(ctx.graph(true, false), caps.solver_cap);
                           int k_prop = vertex_connectivity(ctx.graph(true, true), caps.solver_cap);
                           if (2 * phi + 1 >= n) {
                               a.check(k_full == n - phi, "kappa(RP)=" + std::to_string(k_full));
                               a.check(k_prop == n - phi - 1, "kappa(RP*)=" + std::to_string(k_prop));
                           } else {
                               a.check(k_full >= phi + 1, "kappa(RP)=" + std::to_string(k_full) +
                                                              " below phi(n)+1");
                               a.check(k_prop >= phi, "kappa(RP*)=" + std::to_string(k_prop) +
                                                          " below phi(n)");
                               auto f = factorize(n);
                               bool two_p = f.size() == 2 && f[0].first == 2 && f[0].second == 1 &&
                                            f[1].second == 1;
                               if (two_p) {
                                   a.check(k_full == phi + 1, "2p equality (RP)");
                                   a.check(k_prop == phi, "2p equality (RP*)");
                               }
                           }
                           if (ctx.p_group()) {
                               long p = factorize(n)[0].first;
                               long pm1 = n / p;
                               a.check(k_full == pm1, "kappa(RP(Z_{p^m})) != p^{m-1}");
                               a.check(k_prop == pm1 - 1, "kappa(RP*(Z_{p^m})) != p^{m-1}-1");
                           }
                           return finish("T19", ctx, a, "kappa branches of the cyclic-group formulas");
                       }});

        reg.push_back({"T20", "independence numbers of cyclic reduced power graphs",
                       [](GroupContext& ctx) {
                           Acc a;
                           const Caps& caps = ctx.caps();
                           int alpha_p = independence_number(ctx.graph(true, true), caps.solver_cap);
                           int alpha_f = independence_number(ctx.graph(true, false), caps.solver_cap);
                           a.check(alpha_p == alpha_f, "alpha(RP) != alpha(RP*)");
                           if (ctx.cyclic()) {
                               long n = ctx.group().order();
                               auto f = factorize(n);
                               if (f.size() == 1) {
                                   long p = f[0].first;
                                   a.check(alpha_p == (n / p) * (p - 1),
                                           "alpha(RP*(Z_{p^m}))=" + std::to_string(alpha_p));
                               } else {
                                   long phi = euler_phi(n);
                                   a.check(alpha_p >= phi, "alpha below phi(n)");
                                   bool odd_pq = f.size() == 2 && f[0].second == 1 &&
                                                 f[1].second == 1 && f[0].first != 2;
                                   if (odd_pq)
                                       a.check(alpha_p == phi, "odd pq equality");
                               }
                           }
                           return finish("T20", ctx, a, "alpha formulas and the shared alpha of RP/RP*");
                       }});

        reg.push_back({"T21", "Hamiltonicity of p-group reduced power graphs",
                       [](GroupContext& ctx) {
                           if (!ctx.p_group()) return skipped("T21", ctx, "applies to p-groups");
                           const Caps& caps = ctx.caps();
                           if (ctx.group().order() > caps.hamiltonian_cap)
                               return skipped("T21", ctx, "order above hamiltonian cap");
                           Acc a;
                           long n = ctx.group().order();
                           bool ham_f = is_hamiltonian(ctx.graph(true, false), caps.hamiltonian_cap);
                           bool ham_p = is_hamiltonian(ctx.graph(true, true), caps.hamiltonian_cap);
                           bool want = ctx.cyclic() && n % 2 == 0 && n >= 4;
                           a.check(ham_f == want, "RP hamiltonian=" + b2s(ham_f));
                           a.check(!ham_p, "RP* hamiltonian");
                           return finish("T21", ctx, a,
                                         "RP hamiltonian iff Z_{2^n} (n>=2); RP* never");
                       }});

        reg.push_back({"T22", "structural decompositions of D, Q, SD and the p-group kappa trichotomy",
                       [](GroupContext& ctx) {
                           const auto& g = ctx.group();
                           const Caps& caps = ctx.caps();
                           bool family = g.family == GroupFamily::Dihedral ||
                                         g.family == GroupFamily::Quaternion ||
                                         g.family == GroupFamily::Semidihedral;
                           if (!family && !ctx.p_group())
                               return skipped("T22", ctx, "applies to D/Q/SD families and p-groups");
                           Acc a;
                           if (family) {
                               auto dec = decompose_known(g);
                               a.check(ctx.graph(true, false) == dec.predicted,
                                       "RP does not match the predicted structure " + dec.expression);
                           }
                           auto nonham = [&](const char* tag) {
                               if (g.order() > caps.hamiltonian_cap) return;
                               a.check(!is_hamiltonian(ctx.graph(true, false), caps.hamiltonian_cap),
                                       std::string(tag) + ": RP hamiltonian");
                               a.check(!is_hamiltonian(ctx.graph(true, true), caps.hamiltonian_cap),
                                       std::string(tag) + ": RP* hamiltonian");
                           };
                           int m = g.family_param;
                           if (g.family == GroupFamily::Dihedral) {
                               int kf = vertex_connectivity(ctx.graph(true, false), caps.solver_cap);
                               a.check(kf == 1, "kappa(RP(D))=" + std::to_string(kf));
                               int alpha = independence_number(ctx.graph(true, false), caps.solver_cap);
                               a.check(alpha == m + alpha_rp_cyclic(m, caps),
                                       "alpha(RP(D)) != n + alpha(RP(Z_n))");
                               nonham("D");
                           } else if (g.family == GroupFamily::Quaternion) {
                               int kf = vertex_connectivity(ctx.graph(true, false), caps.solver_cap);
                               int kp = vertex_connectivity(ctx.graph(true, true), caps.solver_cap);
                               a.check(kf == 2, "kappa(RP(Q))=" + std::to_string(kf));
                               a.check(kp == 1, "kappa(RP*(Q))=" + std::to_string(kp));
                               int alpha = independence_number(ctx.graph(true, false), caps.solver_cap);
                               int base = alpha_rp_cyclic(2 * m, caps);
                               a.check(alpha == 2 * m + base || alpha == 2 * m + base - 1,
                                       "alpha(RP(Q)) outside the stated pair");
                               nonham("Q");
                           } else if (g.family == GroupFamily::Semidihedral && m >= 3) {
                               int kf = vertex_connectivity(ctx.graph(true, false), caps.solver_cap);
                               a.check(kf == 1, "kappa(RP(SD))=" + std::to_string(kf));
                               // RP*(SD) has isolated involutions, so its
                               // connectivity is 0 outright; the substance of
                               // the claim is that a^{2n} separates the big
                               // component, i.e. it is a cut vertex.
                               auto cuts = cut_vertices(ctx.graph(true, true));
                               bool central_cut = std::find(cuts.begin(), cuts.end(), 2 * m - 1) !=
                                                  cuts.end();
                               a.check(central_cut, "a^{2n} is not a cut vertex of RP*(SD)");
                               int alpha = independence_number(ctx.graph(true, false), caps.solver_cap);
                               int base = alpha_rp_cyclic(4 * m, caps);
                               a.check(alpha == 4 * m + base || alpha == 4 * m + base - 1,
                                       "alpha(RP(SD)) outside the stated pair");
                               nonham("SD");
                           }
                           if (ctx.p_group()) {
                               int kf = vertex_connectivity(ctx.graph(true, false), caps.solver_cap);
                               long n = g.order();
                               long p = factorize(n)[0].first;
                               int want = ctx.cyclic() ? int(n / p)
                                          : ctx.generalized_quaternion() ? 2
                                                                         : 1;
                               a.check(kf == want, "p-group kappa(RP)=" + std::to_string(kf) +
                                                       " want " + std::to_string(want));
                           }
                           return finish("T22", ctx, a, "family structure, kappa, alpha, hamiltonicity");
                       }});

        reg.push_back({"T23", "component-count identity c(RP*) = c(P*) + sum m_p (p-2)",
                       [](GroupContext& ctx) {
                           Acc a;
                           int c_rps = int(components(ctx.graph(true, true)).size());
                           int c_ps = int(components(ctx.graph(false, true)).size());
                           long sum = 0;
                           for (auto [p, m] : ctx.lattice().prime_maximal_counts())
                               sum += 1L * m * (p - 2);
                           a.check(c_rps - c_ps == sum, "c(RP*)-c(P*)=" +
                                                            std::to_string(c_rps - c_ps) + " want " +
                                                            std::to_string(sum));
                           // Equality corollary: no maximal cyclic subgroup of odd prime order.
                           bool odd_free = true;
                           for (auto [p, m] : ctx.lattice().prime_maximal_counts())
                               if (p != 2 && m > 0) odd_free = false;
                           a.check((c_rps == c_ps) == odd_free, "equality corollary");
                           return finish("T23", ctx, a, "component identity and its corollary");
                       }});

        reg.push_back({"T24", "diameters of RP and RP* with the diam-2 equivalence",
                       [](GroupContext& ctx) {
                           Acc a;
                           const auto& g = ctx.group();
                           auto d_f = diameter(ctx.graph(true, false));
                           std::optional<int> want_f = (ctx.cyclic() && g.order() == 2)
                                                           ? std::optional<int>(1)
                                                           : std::optional<int>(2);
                           a.check(d_f == want_f, "diam(RP)=" + opt_str(d_f));
                           auto d_p = diameter(ctx.graph(true, true));
                           std::optional<int> want_p;
                           if (g.order() == 2) {
                               want_p = 0;  // single vertex, the formula's degenerate case
                           } else if (ctx.cyclic() && ctx.p_group()) {
                               if (is_prime(g.order())) want_p = std::nullopt;
                               else want_p = 2;
                           } else {
                               want_p = diameter(ctx.graph(false, true));
                           }
                           a.check(d_p == want_p,
                                   "diam(RP*)=" + opt_str(d_p) + " want " + opt_str(want_p));
                           // diam-2 equivalence.
                           bool aa = d_p == std::optional<int>(2);
                           bool bb = d_f == d_p;
                           bool cc = false;
                           if (is_nilpotent(g)) {
                               cc = !(ctx.cyclic() && is_prime(g.order()));
                               for (auto [p, cls] : sylow_structure(g)) {
                                   if (cls == SylowClass::Cyclic) continue;
                                   if (p == 2 && cls == SylowClass::GeneralizedQuaternion) continue;
                                   cc = false;
                               }
                           }
                           a.check(aa == bb, "diam-2 clauses (a),(b) disagree");
                           a.check(aa == cc, "diam-2 clauses (a),(c) disagree");
                           return finish("T24", ctx, a, "diameter formulas and the three-way equivalence");
                       }});

        reg.push_back({"T25", "2-connectedness for odd non-prime order, with supporting lemmas",
                       [](GroupContext& ctx) {
                           Acc a;
                           const auto& g = ctx.group();
                           const SimpleGraph& rps = ctx.graph(true, true);
                           const SimpleGraph& ps = ctx.graph(false, true);
                           long n = g.order();
                           if (n % 2 == 1 && !is_prime(n)) {
                               bool conn = is_connected(rps);
                               bool two_r = two_connected(rps);
                               bool two_p = two_connected(ps);
                               a.check(conn == two_r, "connected vs 2-connected (RP*)");
                               a.check(two_r == two_p, "2-connected RP* vs P*");
                           }
                           // Pendant lemma: degree-1 vertices of RP* have order 4.
                           for (int v = 0; v < rps.n; ++v)
                               if (rps.degree(v) == 1)
                                   a.check(g.element_order(v + 1) == 4,
                                           "pendant " + std::to_string(v + 1) + " has order " +
                                               std::to_string(g.element_order(v + 1)));
                           // The p-group connectivity equivalence rests on the
                           // non-prime-order connectivity transfer, so Z_p
                           // itself (RP* edgeless on p-1 vertices) is excluded.
                           if (ctx.p_group() && !is_prime(n)) {
                               bool conn = is_connected(rps);
                               bool want = ctx.cyclic() || ctx.generalized_quaternion();
                               a.check(conn == want, "p-group connectivity of RP*");
                           }
                           if (!is_prime(n))
                               a.check(is_connected(rps) == is_connected(ps),
                                       "RP* connected iff P* connected");
                           return finish("T25", ctx, a, "connectivity equivalences and lemmas");
                       }});

        return reg;
    }();
    return checks;
}

bool is_known_check_id(const std::string& id) {
    for (const auto& c : check_registry())
        if (c.id == id) return true;
    return false;
}

// ---------------------------------------------------------------------------
// Catalog

std::vector<FiniteGroup> default_catalog(int max_order, const Caps& caps) {
    std::vector<FiniteGroup> out;
    std::set<std::string> keys;
    auto add = [&](const std::string& spec, const std::string& key) {
        if (!keys.insert(key).second) return;
        out.push_back(build_group(spec, caps));
    };
    auto product_key = [](std::vector<int> factors) {
        std::sort(factors.begin(), factors.end());
        std::string k = "prod:";
        for (int f : factors) k += std::to_string(f) + ",";
        return k;
    };

    for (int n = 2; n <= max_order; ++n) add("Z" + std::to_string(n), "Z" + std::to_string(n));
    for (int n = 3; 2 * n <= max_order; ++n) add("D" + std::to_string(2 * n), "D" + std::to_string(2 * n));
    for (int n = 2; 4 * n <= max_order; ++n) add("Q" + std::to_string(4 * n), "Q" + std::to_string(4 * n));
    for (int n = 2; 8 * n <= max_order; ++n)
        add("SD" + std::to_string(8 * n), "SD" + std::to_string(8 * n));

    // Elementary abelian p^k, k >= 2.
    for (int p = 2; p <= max_order; ++p) {
        if (!is_prime(p)) continue;
        long pk = 1L * p * p;
        for (int k = 2; pk <= max_order; ++k, pk *= p) {
            add("E" + std::to_string(p) + "^" + std::to_string(k),
                product_key(std::vector<int>(k, p)));
        }
    }

    // Z_4^m x Z_2^k.
    for (int m = 1; ; ++m) {
        long base = 1;
        for (int i = 0; i < m; ++i) base *= 4;
        if (base > max_order) break;
        for (int k = (m == 1 ? 1 : 0); ; ++k) {
            long ord = base << k;
            if (ord > max_order) break;
            std::string spec;
            std::vector<int> factors;
            for (int i = 0; i < m; ++i) {
                spec += (spec.empty() ? "" : "x") + std::string("Z4");
                factors.push_back(4);
            }
            for (int i = 0; i < k; ++i) {
                spec += "xZ2";
                factors.push_back(2);
            }
            add(spec, product_key(factors));
        }
    }

    // General two-factor cyclic products.
    for (int a = 2; a * a <= max_order; ++a)
        for (int b = a; a * b <= max_order; ++b)
            add("Z" + std::to_string(a) + "xZ" + std::to_string(b), product_key({a, b}));

    return out;
}

// ---------------------------------------------------------------------------
// Runner

TheoremCheckResult run_check(const TheoremCheck& check, const FiniteGroup& g, const Caps& caps) {
    GroupContext ctx(g, caps);
    try {
        return check.evaluate(ctx);
    } catch (const CapExceeded& e) {
        TheoremCheckResult r;
        r.check_id = check.id;
        r.group = g.label();
        r.status = CheckStatus::Skipped;
        r.note = e.what();
        return r;
    }
}

SuiteReport run_suite(const std::vector<FiniteGroup>& catalog, const std::set<std::string>& filter,
                      const Caps& caps, int parallelism) {
    const auto& reg = check_registry();
    std::vector<const TheoremCheck*> active;
    for (const auto& c : reg)
        if (filter.empty() || filter.count(c.id)) active.push_back(&c);

    std::vector<std::vector<TheoremCheckResult>> per_group(catalog.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= catalog.size()) return;
            for (const auto* c : active)
                per_group[i].push_back(run_check(*c, catalog[i], caps));
        }
    };
    int threads = std::max(1, parallelism);
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    SuiteReport report;
    for (auto& group_results : per_group)
        for (auto& r : group_results) {
            switch (r.status) {
                case CheckStatus::Pass: ++report.passed; break;
                case CheckStatus::Fail: ++report.failed; break;
                case CheckStatus::Skipped: ++report.skipped; break;
            }
            report.results.push_back(std::move(r));
        }
    return report;
}

std::string SuiteReport::to_json() const {
    nlohmann::json j;
    j["passed"] = passed;
    j["failed"] = failed;
    j["skipped"] = skipped;
    auto arr = nlohmann::json::array();
    for (const auto& r : results) {
        nlohmann::json e;
        e["check"] = r.check_id;
        e["group"] = r.group;
        e["status"] = r.status == CheckStatus::Pass     ? "pass"
                      : r.status == CheckStatus::Fail   ? "fail"
                                                        : "skipped";
        if (!r.expected.empty()) e["expected"] = r.expected;
        if (!r.computed.empty()) e["computed"] = r.computed;
        if (!r.witness.empty()) e["witness"] = r.witness;
        if (!r.note.empty()) e["note"] = r.note;
        arr.push_back(e);
    }
    j["results"] = arr;
    return j.dump(2);
}

std::string SuiteReport::to_table() const {
    std::ostringstream os;
    for (const auto& r : results) {
        const char* s = r.status == CheckStatus::Pass     ? "PASS"
                        : r.status == CheckStatus::Fail   ? "FAIL"
                                                          : "SKIP";
        os << s << "  " << r.check_id;
        for (size_t i = r.check_id.size(); i < 4; ++i) os << ' ';
        os << "  " << r.group;
        if (r.status == CheckStatus::Fail && !r.witness.empty()) os << "  [" << r.witness << "]";
        if (r.status == CheckStatus::Skipped && !r.note.empty()) os << "  (" << r.note << ")";
        os << '\n';
    }
    os << "passed " << passed << ", failed " << failed << ", skipped " << skipped << '\n';
    return os.str();
}

}  // namespace rpg
