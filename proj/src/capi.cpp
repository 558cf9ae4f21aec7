#include "rpg.h"

#include <cstdlib>
#include <cstring>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "errors.hpp"
#include "graph.hpp"
#include "group.hpp"
#include "invariants.hpp"
#include "power.hpp"
#include "theorems.hpp"

using namespace rpg;

struct rpg_group {
    FiniteGroup g;
};

struct rpg_graph {
    bool directed = false;
    SimpleGraph simple;
    DiGraph digraph;
};

namespace {

thread_local std::string g_last_error;

rpg_status fail(rpg_status code, const std::string& msg) {
    g_last_error = msg;
    return code;
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

Caps to_caps(const rpg_caps* c) {
    Caps caps;
    if (c) {
        caps.max_order = c->max_order;
        caps.solver_cap = c->solver_cap;
        caps.hamiltonian_cap = c->hamiltonian_cap;
        caps.perfect_cap = c->perfect_cap;
    }
    return caps;
}

// Translates the library's exception taxonomy to status codes.
rpg_status guard(const std::function<void()>& body) {
    try {
        body();
        return RPG_OK;
    } catch (const MalformedSpec& e) {
        return fail(RPG_ERR_PARSE, e.what());
    } catch (const ParseError& e) {
        return fail(RPG_ERR_PARSE, e.what());
    } catch (const InvalidParameter& e) {
        return fail(RPG_ERR_INVALID, e.what());
    } catch (const NotAGroup& e) {
        return fail(RPG_ERR_NOT_A_GROUP, e.what());
    } catch (const OrderCapExceeded& e) {
        return fail(RPG_ERR_CAP, e.what());
    } catch (const CapExceeded& e) {
        return fail(RPG_ERR_CAP, e.what());
    } catch (const UnsupportedFamily& e) {
        return fail(RPG_ERR_UNSUPPORTED, e.what());
    } catch (const NotNilpotent& e) {
        return fail(RPG_ERR_UNSUPPORTED, e.what());
    } catch (const std::exception& e) {
        return fail(RPG_ERR_INTERNAL, e.what());
    }
}

std::string group_summary(const FiniteGroup& g) {
    auto prof = order_profile(g);
    std::ostringstream os;
    os << "group " << g.label() << "\n";
    os << "order " << g.order() << "\n";
    os << "abelian " << (g.is_abelian() ? "yes" : "no") << "\n";
    os << "cyclic " << (g.is_cyclic() ? "yes" : "no") << "\n";
    os << "nilpotent " << (is_nilpotent(g) ? "yes" : "no") << "\n";
    os << "element orders";
    for (int o : prof.pi_e) os << ' ' << o;
    os << "\n";
    os << "max prime multiplicity " << prof.omega_max << "\n";
    return os.str();
}

}  // namespace

extern "C" {

void rpg_caps_default(rpg_caps* caps) {
    if (!caps) return;
    Caps d;
    caps->max_order = d.max_order;
    caps->solver_cap = d.solver_cap;
    caps->hamiltonian_cap = d.hamiltonian_cap;
    caps->perfect_cap = d.perfect_cap;
}

rpg_status rpg_group_from_spec(const char* spec, const rpg_caps* caps, rpg_group** out) {
    if (!spec || !out) return fail(RPG_ERR_INVALID, "null argument");
    return guard([&] { *out = new rpg_group{build_group(spec, to_caps(caps))}; });
}

rpg_status rpg_group_from_table_json(const char* text, const rpg_caps* caps, rpg_group** out) {
    if (!text || !out) return fail(RPG_ERR_INVALID, "null argument");
    return guard([&] { *out = new rpg_group{from_cayley_table_json(text, to_caps(caps))}; });
}

rpg_status rpg_group_from_table_csv(const char* text, const char* label, const rpg_caps* caps,
                                    rpg_group** out) {
    if (!text || !out) return fail(RPG_ERR_INVALID, "null argument");
    return guard([&] {
        *out = new rpg_group{
            from_cayley_table_csv(text, label ? label : "imported", to_caps(caps))};
    });
}

void rpg_group_free(rpg_group* g) { delete g; }

int rpg_group_order(const rpg_group* g) { return g ? g->g.order() : 0; }

const char* rpg_group_label(const rpg_group* g) { return g ? g->g.label().c_str() : ""; }

rpg_status rpg_group_export(const rpg_group* g, const char* format, char** out) {
    if (!g || !format || !out) return fail(RPG_ERR_INVALID, "null argument");
    std::string fmt = format;
    return guard([&] {
        std::string text;
        if (fmt == "json") text = g->g.export_table_json();
        else if (fmt == "csv") text = g->g.export_table_csv();
        else if (fmt == "summary") text = group_summary(g->g);
        else throw InvalidParameter("unknown group export format: " + fmt);
        *out = dup_string(text);
    });
}

rpg_status rpg_build_graph(const rpg_group* g, int reduced, int directed, int proper,
                           rpg_graph** out) {
    if (!g || !out) return fail(RPG_ERR_INVALID, "null argument");
    return guard([&] {
        GraphVariant v;
        v.reduced = reduced != 0;
        v.directed = directed != 0;
        v.proper = proper != 0;
        auto* gr = new rpg_graph;
        gr->directed = v.directed;
        if (v.directed) gr->digraph = build_power_digraph(g->g, v);
        else gr->simple = build_power_graph(g->g, v);
        *out = gr;
    });
}

void rpg_graph_free(rpg_graph* gr) { delete gr; }

int rpg_graph_vertex_count(const rpg_graph* gr) {
    if (!gr) return 0;
    return gr->directed ? gr->digraph.n : gr->simple.n;
}

int rpg_graph_edge_count(const rpg_graph* gr) {
    if (!gr) return 0;
    return gr->directed ? gr->digraph.arc_count() : gr->simple.edge_count();
}

rpg_status rpg_graph_export(const rpg_graph* gr, const char* format, char** out) {
    if (!gr || !format || !out) return fail(RPG_ERR_INVALID, "null argument");
    std::string fmt = format;
    return guard([&] {
        std::string text;
        if (fmt == "dot") text = gr->directed ? to_dot(gr->digraph) : to_dot(gr->simple);
        else if (fmt == "json") text = gr->directed ? to_json(gr->digraph) : to_json(gr->simple);
        else if (fmt == "csv")
            text = gr->directed ? to_csv_edges(gr->digraph) : to_csv_edges(gr->simple);
        else if (fmt == "table") {
            std::ostringstream os;
            int n = gr->directed ? gr->digraph.n : gr->simple.n;
            os << "vertices " << n << "\n";
            if (gr->directed) {
                os << "arcs " << gr->digraph.arc_count() << "\n";
                for (int u = 0; u < n; ++u)
                    gr->digraph.out_adj[u].for_each([&](int v) { os << u << " -> " << v << "\n"; });
            } else {
                os << "edges " << gr->simple.edge_count() << "\n";
                for (auto [u, v] : gr->simple.edges()) os << u << " -- " << v << "\n";
            }
            text = os.str();
        } else
            throw InvalidParameter("unknown graph export format: " + fmt);
        *out = dup_string(text);
    });
}

rpg_status rpg_invariants(const rpg_group* g, int reduced, int proper, const rpg_caps* caps,
                          const char* format, char** out) {
    if (!g || !format || !out) return fail(RPG_ERR_INVALID, "null argument");
    std::string fmt = format;
    if (fmt != "json" && fmt != "table")
        return fail(RPG_ERR_INVALID, "unknown invariants format: " + fmt);
    return guard([&] {
        GraphVariant v;
        v.reduced = reduced != 0;
        v.proper = proper != 0;
        SimpleGraph graph = build_power_graph(g->g, v);
        InvariantReport rep = compute_invariants(graph, to_caps(caps));
        *out = dup_string(fmt == "json" ? rep.to_json() : rep.to_table());
    });
}

rpg_status rpg_verify(int max_order, const char* only, const rpg_caps* caps, int parallelism,
                      const char* format, char** report, int* failures) {
    if (!report || !failures) return fail(RPG_ERR_INVALID, "null argument");
    std::string fmt = format ? format : "table";
    if (fmt != "json" && fmt != "table")
        return fail(RPG_ERR_INVALID, "unknown report format: " + fmt);
    std::set<std::string> filter;
    if (only && *only) {
        std::stringstream ss(only);
        std::string id;
        while (std::getline(ss, id, ',')) {
            if (id.empty()) continue;
            if (!is_known_check_id(id)) return fail(RPG_ERR_INVALID, "unknown check id: " + id);
            filter.insert(id);
        }
    }
    if (max_order < 2) return fail(RPG_ERR_INVALID, "max_order must be at least 2");
    if (parallelism < 1) parallelism = 1;
    return guard([&] {
        Caps c = to_caps(caps);
        auto catalog = default_catalog(max_order, c);
        SuiteReport rep = run_suite(catalog, filter, c, parallelism);
        *report = dup_string(fmt == "json" ? rep.to_json() : rep.to_table());
        *failures = rep.failed;
    });
}

rpg_status rpg_catalog(int max_order, const rpg_caps* caps, char** out) {
    if (!out) return fail(RPG_ERR_INVALID, "null argument");
    if (max_order < 2) return fail(RPG_ERR_INVALID, "max_order must be at least 2");
    return guard([&] {
        std::ostringstream os;
        for (const auto& g : default_catalog(max_order, to_caps(caps)))
            os << g.label() << '\t' << g.order() << '\n';
        *out = dup_string(os.str());
    });
}

rpg_status rpg_check_ids(char** out) {
    if (!out) return fail(RPG_ERR_INVALID, "null argument");
    return guard([&] {
        std::ostringstream os;
        for (const auto& c : check_registry()) os << c.id << '\t' << c.description << '\n';
        *out = dup_string(os.str());
    });
}

const char* rpg_last_error(void) { return g_last_error.c_str(); }

void rpg_string_free(char* s) { std::free(s); }

}  // extern "C"
