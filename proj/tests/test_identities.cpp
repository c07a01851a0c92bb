#include <doctest.h>

#include "irredmap/identities.hpp"

using namespace irredmap;

namespace {

void require_all(const IdentityReport& report, std::initializer_list<const char*> names) {
    for (const auto& c : report.checks) {
        CAPTURE(c.name);
        CAPTURE(c.detail);
        CHECK(c.passed);
    }
    for (const char* n : names) {
        CAPTURE(n);
        CHECK(report.find(n) != nullptr);
    }
    CHECK(report.all_passed());
}

}  // namespace

TEST_CASE("b = 1, two boundaries of degree 4") {
    const auto report = verify_identities(BoundarySpec(IrreducibilityOrder(1), {2, 2}), WeightSpace({}, 0), 6);
    require_all(report, {"two-boundary reduction", "z-derivative form", "pointing formula at r=1", "pointing marking route"});
}

TEST_CASE("b = 2, boundaries (3,3,4) with weights") {
    const auto report = verify_identities(BoundarySpec(IrreducibilityOrder(2), {3, 3, 4}), WeightSpace({3}, 2), 6);
    require_all(report, {"marking derivatives", "Leibniz collapse", "tree/forest decomposition", "z-derivative form",
                         "pointing marking route"});
}

TEST_CASE("b = 0 general bipartite forms") {
    const auto report = verify_identities(BoundarySpec(IrreducibilityOrder(0), {1, 2}), WeightSpace({1}, 2), 6);
    require_all(report, {"bipartite two-boundary form", "bipartite multi-boundary form"});
    const auto three = verify_identities(BoundarySpec(IrreducibilityOrder(0), {1, 2, 3}), WeightSpace({2}, 2), 5);
    require_all(three, {"Leibniz collapse", "bipartite multi-boundary form"});
}

TEST_CASE("grid of orders and boundary counts") {
    for (int b = 0; b <= 2; ++b) {
        for (int r = 2; r <= 4; ++r) {
            CAPTURE(b);
            CAPTURE(r);
            std::vector<int> js;
            for (int l = 0; l < r; ++l) js.push_back(b + 1 + (l % 2));
            const auto report = verify_identities(BoundarySpec(IrreducibilityOrder(b), js), WeightSpace({b + 1}, 2), 6);
            require_all(report, {"z-derivative form"});
        }
    }
}

TEST_CASE("order zero and invalid boundary counts") {
    const auto report = verify_identities(BoundarySpec(IrreducibilityOrder(1), {2, 3}), WeightSpace({2}, 1), 0);
    CHECK_FALSE(report.checks.empty());
    CHECK_THROWS_AS(verify_identities(BoundarySpec(IrreducibilityOrder(1), {2}), WeightSpace({}, 0), 3),
                    std::invalid_argument);
}
