#pragma once

#include <functional>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "group.hpp"
#include "invariants.hpp"
#include "power.hpp"

namespace rpg {

// Lazily-built per-group state shared by the checks of one group.
class GroupContext {
public:
    GroupContext(const FiniteGroup& g, const Caps& caps) : g_(g), caps_(caps) {}

    const FiniteGroup& group() const { return g_; }
    const Caps& caps() const { return caps_; }
    const CyclicSubgroupLattice& lattice();
    const ElementOrderProfile& profile();
    // reduced/power x full/proper; memoized.
    const SimpleGraph& graph(bool reduced, bool proper);

    bool cyclic();
    bool abelian();
    bool p_group() const;
    bool quaternion_q8();
    bool generalized_quaternion();
    int involution_count() const;

private:
    const FiniteGroup& g_;
    const Caps& caps_;
    std::optional<CyclicSubgroupLattice> lat_;
    std::optional<ElementOrderProfile> prof_;
    std::optional<SimpleGraph> graphs_[2][2];
    std::optional<bool> cyclic_, abelian_;
};

enum class CheckStatus { Pass, Fail, Skipped };

struct TheoremCheckResult {
    std::string check_id;
    std::string group;
    CheckStatus status = CheckStatus::Skipped;
    std::string expected, computed, witness, note;
};

struct TheoremCheck {
    std::string id;
    std::string description;
    std::function<TheoremCheckResult(GroupContext&)> evaluate;
};

struct SuiteReport {
    std::vector<TheoremCheckResult> results;
    int passed = 0, failed = 0, skipped = 0;

    std::string to_json() const;
    std::string to_table() const;
};

const std::vector<TheoremCheck>& check_registry();
bool is_known_check_id(const std::string& id);

std::vector<FiniteGroup> default_catalog(int max_order, const Caps& caps = {});

TheoremCheckResult run_check(const TheoremCheck& check, const FiniteGroup& g, const Caps& caps);
SuiteReport run_suite(const std::vector<FiniteGroup>& catalog, const std::set<std::string>& filter,
                      const Caps& caps, int parallelism = 1);

}  // namespace rpg
