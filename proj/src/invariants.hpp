#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "graph.hpp"
#include "group.hpp"

namespace rpg {

// Exact solvers. The NP-hard ones throw CapExceeded above their size cap.
int clique_number(const SimpleGraph& g, int cap = 256);
int chromatic_number(const SimpleGraph& g, int cap = 256);
int independence_number(const SimpleGraph& g, int cap = 256);
int vertex_connectivity(const SimpleGraph& g, int cap = 256);
std::vector<int> cut_vertices(const SimpleGraph& g);
std::vector<std::pair<int, int>> cut_edges(const SimpleGraph& g);
bool is_hamiltonian(const SimpleGraph& g, int cap = 64);
bool is_perfect(const SimpleGraph& g, int cap = 40);

// Odd-hole detection used by is_perfect; exposed for testing. Finds an
// induced odd cycle of length >= 5 in g itself (not the complement).
bool has_odd_hole(const SimpleGraph& g);

struct InvariantReport {
    std::optional<int> clique_number, chromatic_number, independence_number;
    std::optional<int> vertex_connectivity;
    std::optional<int> girth, diameter;  // nullopt only when marked "inf"
    bool girth_infinite = false, diameter_infinite = false;
    int component_count = 0;
    std::vector<int> cut_vertices;
    std::vector<std::pair<int, int>> cut_edges;
    std::optional<bool> is_hamiltonian, is_perfect;
    // Per-field "exact" or "skipped(cap N)".
    std::vector<std::pair<std::string, std::string>> method_notes;

    std::string to_json() const;
    std::string to_table() const;
};

InvariantReport compute_invariants(const SimpleGraph& g, const Caps& caps = {});

}  // namespace rpg
