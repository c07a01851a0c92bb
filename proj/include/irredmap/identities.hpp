#pragma once

#include <string>
#include <vector>

#include "irredmap/census.hpp"

namespace irredmap {

struct IdentityCheck {
    std::string name;
    bool passed = false;
    /// Empty on success; the first differing coefficient otherwise.
    std::string detail;
};

struct IdentityReport {
    std::vector<IdentityCheck> checks;

    bool all_passed() const;
    const IdentityCheck* find(const std::string& name) const;
};

/// Evaluates both sides of every cross-route identity for the given
/// boundaries (r >= 2) and compares them exactly modulo z^{n+1} and weight
/// degree > space.max_degree. Series are computed internally with enough
/// extra z-order and weight degree that every derivative route is exact at
/// the compared bounds; the boundary degrees j_2..j_r are added to the active
/// weights since the marking routes differentiate with respect to them.
///
/// Checks: marking route vs the main formula (reduction to the two-boundary
/// formula when r = 2), Leibniz collapse and tree/forest decomposition
/// (r >= 3), z-derivative form, pointing formula at r = 1, pointing marking
/// route, and for b = 0 the general-bipartite forms.
/// Discrepancies are reported, never thrown.
IdentityReport verify_identities(const BoundarySpec& spec, const WeightSpace& space, int n);

}  // namespace irredmap
