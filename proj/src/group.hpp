#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bitset.hpp"
#include "errors.hpp"

namespace rpg {

// Size limits for the exponential solvers and group constructors.
// Exceeding a cap is always an explicit error or a "skipped" note,
// never a silent approximation.
struct Caps {
    int max_order = 512;
    int solver_cap = 256;       // clique / chromatic / alpha / kappa
    int hamiltonian_cap = 64;
    int perfect_cap = 40;
    bool force_exhaustive_assoc = false;
};

enum class GroupFamily {
    Cyclic,            // Z_n, param = n
    Dihedral,          // D_{2n}, param = n
    Quaternion,        // Q_{4n} (dicyclic), param = n
    Semidihedral,      // SD_{8n}, param = n
    ElementaryAbelian, // E_p^k, param = p (order p^k)
    Product,
    Imported,
};

// Order-n Cayley table with identity at index 0. The single source of
// truth for all algebra; immutable after construction.
class FiniteGroup {
public:
    // Validates the table (Latin square, identity, inverses,
    // associativity per cap policy) and throws NotAGroup on failure.
    FiniteGroup(int order, std::vector<int> table, std::string label,
                const Caps& caps = {}, bool assoc_by_construction = false);

    int order() const { return n_; }
    const std::string& label() const { return label_; }
    int identity() const { return 0; }

    int mul(int i, int j) const { return table_[size_t(i) * n_ + j]; }
    int inverse(int i) const { return inv_[i]; }
    int power(int x, long k) const;
    int element_order(int x) const { return orders_[x]; }
    const std::vector<int>& element_orders() const { return orders_; }

    bool is_abelian() const;
    bool is_cyclic() const;

    const std::vector<int>& table() const { return table_; }
    const std::vector<std::string>& element_labels() const { return labels_; }

    GroupFamily family = GroupFamily::Imported;
    int family_param = 0;

    void set_element_labels(std::vector<std::string> labels) { labels_ = std::move(labels); }

    std::string export_table_json() const;
    std::string export_table_csv() const;

private:
    int n_;
    std::vector<int> table_;  // row-major n*n
    std::vector<int> inv_;
    std::vector<int> orders_;
    std::vector<std::string> labels_;
    std::string label_;
};

// Per-element generated subgroups, generator-equivalence classes and
// maximal cyclic subgroups.
struct CyclicSubgroupLattice {
    std::vector<std::vector<int>> gen_subgroup;  // sorted element sets
    std::vector<Bitset> gen_mask;                // same sets as bitmasks
    std::vector<int> orders;                     // o(x)
    std::vector<std::vector<int>> classes;       // generator-equivalence classes
    std::vector<int> class_of;                   // element -> class index
    std::vector<Bitset> maximal_cyclic;
    std::vector<int> maximal_cyclic_order;

    // Number of maximal cyclic subgroups of prime order p, keyed by p.
    std::map<int, int> prime_maximal_counts() const;
};

struct ElementOrderProfile {
    std::vector<int> pi_e;  // sorted set of element orders
    int omega_max = 0;
    int witness = 0;        // element realizing omega_max
};

enum class SylowClass { Cyclic, GeneralizedQuaternion, Other };

FiniteGroup build_group(const std::string& spec, const Caps& caps = {});
FiniteGroup from_cayley_table_json(const std::string& text, const Caps& caps = {});
FiniteGroup from_cayley_table_csv(const std::string& text, const std::string& label,
                                  const Caps& caps = {});
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h, const Caps& caps = {});

CyclicSubgroupLattice compute_lattice(const FiniteGroup& g);
ElementOrderProfile order_profile(const FiniteGroup& g);

int big_omega(long n);
long euler_phi(long n);
bool is_prime(long n);
std::vector<std::pair<long, int>> factorize(long n);

bool is_nilpotent(const FiniteGroup& g);
// Requires is_nilpotent(g); throws NotNilpotent otherwise.
std::map<int, SylowClass> sylow_structure(const FiniteGroup& g);

}  // namespace rpg
