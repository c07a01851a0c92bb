#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <set>

#include "irredmap/maps.hpp"

using namespace irredmap;

namespace {

// Single edge: darts 0, 1 at distinct vertices.
CombinatorialMap single_edge() { return CombinatorialMap({0, 1}); }

// Doubled edge: vertex u = (0 2), vertex v = (1 3).
CombinatorialMap doubled_edge() { return CombinatorialMap({2, 3, 0, 1}); }

// 4-cycle u0-u1-u2-u3 with edges e_k = (2k at u_k, 2k+1 at u_{k+1}).
CombinatorialMap square() {
    std::vector<int> sigma(8);
    for (int k = 0; k < 4; ++k) {
        const int out = 2 * k, in = (2 * k + 7) % 8;  // darts at u_k
        sigma[static_cast<std::size_t>(out)] = in;
        sigma[static_cast<std::size_t>(in)] = out;
    }
    return CombinatorialMap(sigma);
}

std::vector<int> face_degrees(const CombinatorialMap& m) {
    std::vector<int> d;
    for (const auto& f : faces_of(m)) d.push_back(f.degree);
    std::sort(d.begin(), d.end());
    return d;
}

// All sigma permutations for a fixed alpha; rooted classes via canonical codes.
std::set<std::vector<int>> brute_force_classes(int edges, bool bipartite_only) {
    std::vector<int> sigma(2 * static_cast<std::size_t>(edges));
    std::iota(sigma.begin(), sigma.end(), 0);
    std::set<std::vector<int>> classes;
    do {
        const CombinatorialMap m(sigma);
        if (!m.is_planar()) continue;
        if (bipartite_only && !is_bipartite(m)) continue;
        classes.insert(m.canonical_code());
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return classes;
}

std::optional<Integer> formula(IrreducibilityOrder order, const FaceProfile& p) {
    try {
        return count_profile(order, p);
    } catch (const ValidityError&) {
        return std::nullopt;
    }
}

// Profiles with E edges: root half-degree m > b, inner half-degrees >= max(b, 1).
std::vector<FaceProfile> profiles_with_edges(int b, int edges) {
    std::vector<FaceProfile> out;
    std::map<int, long> q;
    const int lo = std::max(b, 1);
    for (int m = b + 1; m <= edges; ++m) {
        std::function<void(int, int)> rec = [&](int j, int left) {
            if (left == 0) {
                out.emplace_back(m, q);
                return;
            }
            if (j > left) return;
            for (int c = 0; c * j <= left; ++c) {
                if (c) q[j] = c;
                rec(j + 1, left - c * j);
            }
            q.erase(j);
        };
        rec(lo, edges - m);
    }
    return out;
}

}  // namespace

TEST_CASE("map validation") {
    CHECK_THROWS_AS(CombinatorialMap({0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(CombinatorialMap({0, 1}, {0, 1}, 0), std::invalid_argument);   // alpha has fixed points
    CHECK_THROWS_AS(CombinatorialMap({1, 0}, {0, 1}, 5), std::invalid_argument);
    CHECK(CombinatorialMap().vertex_count() == 1);
    CHECK(CombinatorialMap().face_count() == 1);
}

TEST_CASE("faces, bipartiteness and girth of small maps") {
    const auto e = single_edge();
    CHECK(face_degrees(e) == std::vector<int>{2});
    CHECK(is_bipartite(e));
    CHECK(girth(e).is_infinite());
    CHECK(girth(e).to_string() == "inf");
    CHECK_THROWS_AS(girth(e).value(), std::logic_error);

    const auto dbl = doubled_edge();
    CHECK(dbl.is_planar());
    CHECK(face_degrees(dbl) == std::vector<int>{2, 2});
    CHECK(is_bipartite(dbl));
    CHECK(girth(dbl) == Girth::finite(2));

    const auto sq = square();
    CHECK(sq.is_planar());
    CHECK(face_degrees(sq) == std::vector<int>{4, 4});
    CHECK(girth(sq).value() == 4);
    CHECK(simple_cycles(sq, 4).size() == 1);
    CHECK(simple_cycles(sq, 2).empty());

    const CombinatorialMap loop({1, 0});
    CHECK_FALSE(is_bipartite(loop));
    CHECK(girth(loop).value() == 1);
}

TEST_CASE("irreducibility by definition") {
    const auto dbl = doubled_edge();
    CHECK_FALSE(is_d_irreducible(dbl, 2, {0}));
    CHECK(is_d_irreducible(dbl, 2, {}));
    CHECK_FALSE(is_d_irreducible(dbl, 4, {}));
    CHECK(is_d_irreducible(dbl, 0, {0, 1}));
    const auto sq = square();
    CHECK(is_d_irreducible(sq, 4, {}));
    CHECK_FALSE(is_d_irreducible(sq, 4, {root_face_index(sq)}));
    CHECK(is_d_irreducible(sq, 2, {root_face_index(sq)}));
    CHECK_FALSE(is_d_irreducible(sq, 4, {0, 1}));
    CHECK(is_d_irreducible(single_edge(), 6, {}));
    CHECK_THROWS_AS(is_d_irreducible(sq, 3, {}), std::invalid_argument);
}

TEST_CASE("rooted map totals") {
    const long bipartite[] = {1, 3, 12, 56, 288, 1584, 9152, 54912};
    for (int e = 1; e <= 8; ++e) CHECK(count_rooted_maps(e, true) == bipartite[e - 1]);
    const long all[] = {2, 9, 54, 378, 2916, 24057};
    for (int e = 1; e <= 6; ++e) CHECK(count_rooted_maps(e, false) == all[e - 1]);
}

TEST_CASE("generated maps are valid, distinct and complete") {
    for (bool bip : {true, false}) {
        std::set<std::vector<int>> codes;
        long total = 0;
        enumerate_rooted_maps({6, 1, bip}, [&](const CombinatorialMap& m) {
            ++total;
            CHECK(m.is_planar());
            if (bip) CHECK(is_bipartite(m));
            codes.insert(m.canonical_code());
        });
        CHECK(codes.size() == static_cast<std::size_t>(total));
    }
    for (int e = 1; e <= 4; ++e) {
        for (bool bip : {true, false}) {
            CAPTURE(e);
            std::set<std::vector<int>> generated;
            enumerate_rooted_maps({e, e, bip}, [&](const CombinatorialMap& m) { generated.insert(m.canonical_code()); });
            CHECK(generated == brute_force_classes(e, bip));
        }
    }
}

TEST_CASE("bipartite iff all faces even, up to six edges") {
    enumerate_rooted_maps({6, 1, false}, [&](const CombinatorialMap& m) {
        const auto degrees = face_degrees(m);
        const bool even = std::all_of(degrees.begin(), degrees.end(), [](int d) { return d % 2 == 0; });
        CHECK(is_bipartite(m) == even);
    });
}

TEST_CASE("canonical codes ignore dart labels") {
    std::mt19937 rng(7);
    for (unsigned seed : {1u, 2u}) {
        rng.seed(seed);
        std::set<std::vector<int>> plain, shuffled;
        enumerate_rooted_maps({5, 5, true}, [&](const CombinatorialMap& m) {
            std::vector<int> perm(static_cast<std::size_t>(m.darts()));
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            const auto r = m.relabeled(perm);
            CHECK(r.canonical_code() == m.canonical_code());
            CHECK(face_degrees(r) == face_degrees(m));
            CHECK(girth(r) == girth(m));
            plain.insert(m.canonical_code());
            shuffled.insert(r.canonical_code());
        });
        CHECK(plain == shuffled);
        CHECK(plain.size() == 288);
    }
}

TEST_CASE("census agrees with the formulas") {
    for (int q2 = 0; q2 <= 1; ++q2) {
        CHECK(census_count(IrreducibilityOrder(2), FaceProfile(3, {{3, 1}, {2, q2}})) == (q2 == 0 ? 1 : 6));
    }
    CHECK(census_count(IrreducibilityOrder(1), FaceProfile(2, {{2, 1}})) == 1);
    CHECK(census_count(IrreducibilityOrder(1), FaceProfile(2, {{2, 2}})) == 2);

    for (int b = 0; b <= 2; ++b) {
        const IrreducibilityOrder order(b);
        for (int E = 1; E <= 7; ++E) {
            for (const auto& [key, n] : oracle_census(order, E)) {
                const FaceProfile p(key.first, key.second);
                CAPTURE(b);
                CAPTURE(p.to_string());
                if (const auto f = formula(order, p)) CHECK(n == *f);
            }
        }
    }
}

TEST_CASE("oracle census misses no formula profile") {
    for (int b = 0; b <= 2; ++b) {
        const IrreducibilityOrder order(b);
        int compared = 0;
        for (int E = 1; E <= 7; ++E) {
            const auto tally = oracle_census(order, E);
            for (const auto& p : profiles_with_edges(b, E)) {
                const auto f = formula(order, p);
                if (!f) continue;
                ++compared;
                const auto it = tally.find(profile_key(p));
                CAPTURE(b);
                CAPTURE(p.to_string());
                CHECK((it == tally.end() ? Integer(0) : it->second) == *f);
            }
        }
        CHECK(compared >= 3);
    }
}

TEST_CASE("multi-boundary counts") {
    CHECK(multi_boundary_count(IrreducibilityOrder(0), BoundarySpec(IrreducibilityOrder(0), {1, 1, 1}), {{0, 2}}) == 8);
    CHECK(multi_boundary_count(IrreducibilityOrder(0), BoundarySpec(IrreducibilityOrder(0), {1, 1}), {{0, 2}}) == 2);
    CHECK(multi_boundary_count(IrreducibilityOrder(1), BoundarySpec(IrreducibilityOrder(1), {2, 2}), {}) == 4);
    for (int b = 0; b <= 2; ++b) {
        const IrreducibilityOrder order(b);
        const int j = b + 1;
        for (const auto& js : std::vector<std::vector<int>>{{j, j}, {j, j + 1}, {j + 1, j}, {j, j, j}}) {
            const BoundarySpec spec(order, js);
            const int base = std::accumulate(js.begin(), js.end(), 0);
            for (int inner = 0; base + inner * std::max(b, 1) <= 7; ++inner) {
                CAPTURE(b);
                CAPTURE(inner);
                std::map<int, long> profile;
                int zpow = inner;
                if (b == 0) {
                    // inner counts vertices
                    if (inner == 0) continue;
                    profile[0] = inner;
                } else if (inner) {
                    profile[b] = inner;
                }
                const auto F = gf_multi_boundaries(spec, WeightSpace({}, 0), zpow);
                if (b == 0 && base > 7) continue;
                CHECK(multi_boundary_count(order, spec, profile) == F.coefficient(zpow).to_integer());
            }
        }
    }
}

TEST_CASE("map JSON round trip") {
    const auto sq = square();
    const auto j = map_to_json(sq);
    CHECK(j["darts"] == 8);
    CHECK(j["root"] == 0);
    const auto back = map_from_json(j);
    CHECK(back.sigma_perm() == sq.sigma_perm());
    CHECK(back.alpha_perm() == sq.alpha_perm());
    CHECK(map_to_json(back).dump() == j.dump());
}

TEST_CASE("oracle ceiling") {
    CHECK(oracle_edge_ceiling() <= kMaxOracleEdges);
    CHECK_THROWS_AS(enumerate_rooted_maps({kMaxOracleEdges + 1, 1, true}, [](const CombinatorialMap&) {}),
                    OracleLimitError);
    CHECK_THROWS_AS(count_rooted_maps(9, false), OracleLimitError);
}
