#include <doctest.h>

#include <algorithm>

#include "irredmap/census.hpp"

using namespace irredmap;

namespace {

std::vector<ExactScalar> scalars(const WeightedSeries& s) {
    std::vector<ExactScalar> out;
    for (int n = 0; n <= s.order(); ++n) out.push_back(s.coefficient(n));
    return out;
}

std::vector<ExactScalar> ints(std::initializer_list<long> v) {
    std::vector<ExactScalar> out;
    for (long x : v) out.emplace_back(x);
    return out;
}

const WeightSpace kNone({}, 0);

// All profiles over half-degrees [lo, hi] with edge count exactly E.
void profiles_with_edges(int lo, int hi, long E, int m, std::map<int, long> q, int j,
                         std::vector<FaceProfile>& out) {
    if (j > hi) {
        FaceProfile p(m, q);
        if (p.edges() == E) out.push_back(p);
        return;
    }
    FaceProfile partial(m, q);
    for (long c = 0; partial.edges() + c * j <= E; ++c) {
        auto next = q;
        next[j] = c;
        profiles_with_edges(lo, hi, E, m, next, j + 1, out);
    }
}

std::vector<FaceProfile> profiles_with_edges(int lo, int hi, int m_min, long E) {
    std::vector<FaceProfile> out;
    for (int m = m_min; m <= E; ++m) profiles_with_edges(lo, hi, E, m, {}, lo, out);
    return out;
}

}  // namespace

TEST_CASE("boundary spec and face profile") {
    const BoundarySpec spec(IrreducibilityOrder(2), {3, 4, 5});
    CHECK(spec.r() == 3);
    CHECK(spec.exponent() == 14);
    CHECK(spec.marking_prefactor() == Integer(6 * 1) * Integer(8 * 7) * Integer(10 * 36));
    CHECK_THROWS_AS(BoundarySpec(IrreducibilityOrder(2), {2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(BoundarySpec(IrreducibilityOrder(1), {}), std::invalid_argument);

    const FaceProfile p(3, {{2, 2}, {3, 1}});
    CHECK(p.faces() == 4);
    CHECK(p.edges() == 10);
    CHECK(p.vertices() == 8);
    CHECK(p.to_string() == "m=3,q2=2,q3=1");
    CHECK_THROWS_AS(FaceProfile(3, {{2, -1}}), std::invalid_argument);
}

TEST_CASE("two-boundary series") {
    CHECK(scalars(gf_two_boundaries(IrreducibilityOrder(1), 2, 2, kNone, 4)) == ints({4, 16, 24, 16, 4}));
    CHECK(scalars(gf_two_boundaries(IrreducibilityOrder(0), 1, 1, kNone, 2)) == ints({0, 0, 2}));
    CHECK_THROWS_AS(gf_two_boundaries(IrreducibilityOrder(2), 2, 3, kNone, 2), std::invalid_argument);
    const WeightSpace space({3, 4}, 2);
    for (int b = 0; b <= 2; ++b) {
        CHECK(gf_two_boundaries(IrreducibilityOrder(b), 3, 4, space, 5) ==
              gf_two_boundaries(IrreducibilityOrder(b), 4, 3, space, 5));
    }
}

TEST_CASE("multi-boundary series") {
    CHECK(scalars(gf_multi_boundaries(BoundarySpec(IrreducibilityOrder(0), {1, 1, 1}), kNone, 2)) ==
          ints({0, 0, 8}));
    const WeightSpace space({3, 4}, 2);
    for (int b = 0; b <= 2; ++b) {
        const IrreducibilityOrder order(b);
        CHECK(gf_multi_boundaries(BoundarySpec(order, {3, 4}), space, 5) == gf_two_boundaries(order, 3, 4, space, 5));
    }
    const auto R = solve_R(IrreducibilityOrder(1), kNone, 1);
    CHECK_THROWS_AS(gf_multi_boundaries(BoundarySpec(IrreducibilityOrder(1), {2, 2, 2, 2}), R), std::invalid_argument);
    CHECK_THROWS_AS(gf_multi_boundaries(BoundarySpec(IrreducibilityOrder(1), {2}), R), std::invalid_argument);
    CHECK(gf_multi_boundaries(BoundarySpec(IrreducibilityOrder(1), {2, 2, 2}), R).order() == 0);
}

TEST_CASE("multi-boundary series is invariant under permutations") {
    const WeightSpace space({3, 4, 5}, 2);
    for (int b = 0; b <= 2; ++b) {
        std::vector<int> js{3, 4, 5, 3};
        std::sort(js.begin(), js.end());
        const auto reference = gf_multi_boundaries(BoundarySpec(IrreducibilityOrder(b), js), space, 4);
        do {
            CHECK(gf_multi_boundaries(BoundarySpec(IrreducibilityOrder(b), js), space, 4) == reference);
        } while (std::next_permutation(js.begin(), js.end()));
    }
}

TEST_CASE("pointing series") {
    CHECK(scalars(pointing_series(IrreducibilityOrder(1), 2, kNone, 1)) == ints({4, 4}));
    CHECK(scalars(pointing_series(IrreducibilityOrder(0), 1, kNone, 1)) == ints({0, 2}));
    CHECK(scalars(pointing_series(IrreducibilityOrder(0), 1, kNone, 0)) == ints({0}));
    CHECK_THROWS_AS(pointing_series(IrreducibilityOrder(1), 1, kNone, 1), std::invalid_argument);
}

TEST_CASE("two hexagons with squares") {
    const long expected[] = {1, 6, 21};
    for (long q2 = 0; q2 <= 2; ++q2) {
        const FaceProfile p(3, {{3, 1}, {2, q2}});
        CHECK(count_profile(IrreducibilityOrder(2), p) == expected[q2]);
        CHECK(count_4irreducible(p) == expected[q2]);
        CHECK(count_4irreducible_hypergeometric(p) == expected[q2]);
    }
}

TEST_CASE("two large faces sequence") {
    const long seq[] = {1, 6, 21, 62, 180, 540, 1683, 5418, 17901, 60390, 207207, 720954, 2537964, 9023328};
    for (long q2 = 0; q2 <= 13; ++q2) {
        CHECK(count_two_large_faces_4irr(3, 3, q2) == seq[q2]);
        CHECK(count_4irreducible(FaceProfile(3, {{3, 1}, {2, q2}})) == seq[q2]);
    }
    for (int m = 3; m <= 6; ++m) {
        for (int mp = 3; mp <= 6; ++mp) {
            for (long q2 = 0; q2 <= 6; ++q2) {
                CHECK(count_two_large_faces_4irr(m, mp, q2) * mp == count_two_large_faces_4irr(mp, m, q2) * m);
                CHECK(count_two_large_faces_4irr(m, mp, q2) == count_4irreducible(FaceProfile(m, {{mp, 1}, {2, q2}})));
            }
        }
    }
    CHECK_THROWS_AS(count_two_large_faces_4irr(2, 3, 0), std::invalid_argument);
}

TEST_CASE("hexangulations of girth 6") {
    const long seq[] = {1, 3, 17, 128, 1131, 11070, 116317, 1287480, 14829188, 176250143, 2148687567};
    for (long F = 2; F <= 12; ++F) {
        CHECK(count_hexangulations_girth6(F) == seq[F - 2]);
        const FaceProfile p(3, {{3, F - 1}});
        CHECK(count_girth6(p) == seq[F - 2]);
        CHECK(count_profile(IrreducibilityOrder(2), p) == seq[F - 2]);
    }
    CHECK_THROWS_AS(count_hexangulations_girth6(1), ValidityError);
    CHECK_THROWS_AS(count_girth6(FaceProfile(3, {{2, 1}, {3, 1}})), std::invalid_argument);
}

TEST_CASE("quadrangulations without multiple edges") {
    CHECK(count_quadrangulations_simple(1) == 2);
    CHECK(count_quadrangulations_simple(2) == 1);
    CHECK(count_quadrangulations_simple(3) == 2);
    CHECK(count_quadrangulations_simple(4) == 6);
    for (long F = 2; F <= 15; ++F) {
        const FaceProfile p(2, {{2, F - 1}});
        CHECK(count_quadrangulations_simple(F) == count_simple_bipartite(p));
        CHECK(count_quadrangulations_simple(F) == count_2m_angulations_simple(2, F));
        CHECK(count_quadrangulations_simple(F) == count_profile(IrreducibilityOrder(1), p));
    }
}

TEST_CASE("2m-angulations specialize the simple bipartite count") {
    for (int m = 2; m <= 5; ++m) {
        for (long F = 2; F <= 8; ++F) {
            CHECK(count_2m_angulations_simple(m, F) == count_simple_bipartite(FaceProfile(m, {{m, F - 1}})));
        }
    }
    CHECK_THROWS_AS(count_simple_bipartite(FaceProfile(2, {{1, 1}, {2, 1}})), std::invalid_argument);
    CHECK_THROWS_AS(count_simple_bipartite(FaceProfile(2, {})), ValidityError);
}

TEST_CASE("Tutte's formula") {
    CHECK(count_bipartite_tutte(FaceProfile(1, {{1, 1}})) == 1);
    CHECK(count_bipartite_tutte(FaceProfile(2, {})) == 2);
    Integer total = 0;
    for (const auto& p : profiles_with_edges(1, 2, 1, 2)) total += count_bipartite_tutte(p);
    CHECK(total == 3);
    // Rooted bipartite maps by edges: 1, 3, 12, 56, 288.
    const long by_edges[] = {1, 3, 12, 56, 288};
    for (long E = 1; E <= 5; ++E) {
        Integer sum = 0;
        for (const auto& p : profiles_with_edges(1, static_cast<int>(E), 1, E)) sum += count_bipartite_tutte(p);
        CHECK(sum == by_edges[E - 1]);
    }
}

TEST_CASE("specialization lattice over all small profiles") {
    for (long E = 2; E <= 12; ++E) {
        for (const auto& p : profiles_with_edges(1, 6, 1, E)) {
            CAPTURE(p.to_string());
            const bool has_digon = p.count(1) > 0;
            const bool has_square = p.count(2) > 0;
            if (p.faces() >= 2) {
                CHECK(count_profile(IrreducibilityOrder(0), p) == count_bipartite_tutte(p));
            } else {
                CHECK_THROWS_AS(count_profile(IrreducibilityOrder(0), p), ValidityError);
            }
            if (!has_digon && p.m() >= 2) {
                if (p.faces() >= 2) {
                    CHECK(count_profile(IrreducibilityOrder(1), p) == count_simple_bipartite(p));
                } else {
                    CHECK_THROWS_AS(count_profile(IrreducibilityOrder(1), p), ValidityError);
                }
            }
            if (!has_digon && p.m() >= 3) {
                if (p.faces() >= 2 + p.count(2)) {
                    const auto n = count_4irreducible(p);
                    CHECK(count_profile(IrreducibilityOrder(2), p) == n);
                    CHECK(count_4irreducible_hypergeometric(p) == n);
                    if (!has_square) CHECK(count_girth6(p) == n);
                } else {
                    CHECK_THROWS_AS(count_4irreducible(p), ValidityError);
                    CHECK_THROWS_AS(count_profile(IrreducibilityOrder(2), p), ValidityError);
                }
            }
        }
    }
}

TEST_CASE("profile counts agree with coefficients of the multi-boundary series") {
    // Mark every face of degree > d as an ordered boundary with a marked edge;
    // the count of rooted maps is the coefficient divided by prod 2j_l q_j!.
    for (int b = 0; b <= 3; ++b) {
        const IrreducibilityOrder order(b);
        for (long E = 2; E <= 10; ++E) {
            for (const auto& p : profiles_with_edges(std::max(b, 1), 6, order.min_half_degree(), E)) {
                const long large = p.faces() - (b == 0 ? 0 : p.count(b));
                if (large < 2 || large > 5) continue;
                CAPTURE(b);
                CAPTURE(p.to_string());
                std::vector<int> js{p.m()};
                Integer divisor = 1;
                for (const auto& [j, c] : p.q()) {
                    if (j == b) continue;
                    for (long i = 0; i < c; ++i) {
                        js.push_back(j);
                        divisor *= 2 * j;
                    }
                    divisor *= factorial(c);
                }
                const int zpow = static_cast<int>(b == 0 ? p.vertices() : p.count(b));
                const auto F = gf_multi_boundaries(BoundarySpec(order, js), kNone, zpow);
                ExactScalar value = F.coefficient(zpow);
                value /= ExactScalar(divisor);
                CHECK(value == ExactScalar(count_profile(order, p)));
            }
        }
    }
}

TEST_CASE("counts are nonnegative integers") {
    for (long F = 2; F <= 20; ++F) CHECK(count_hexangulations_girth6(F) > 0);
    for (long q2 = 0; q2 <= 40; ++q2) CHECK(count_two_large_faces_4irr(4, 5, q2) > 0);
    CHECK(count_profile(IrreducibilityOrder(3), FaceProfile(4, {{3, 3}, {4, 1}, {5, 2}})) > 0);
}

TEST_CASE("formula records serialize values as strings") {
    const FormulaRecord r{"hex-girth6", {{"F", 12}}, count_hexangulations_girth6(12)};
    const auto j = to_json(r);
    CHECK(j["value"] == "2148687567");
    CHECK(j.dump() == R"({"formula":"hex-girth6","parameters":{"F":12},"value":"2148687567"})");
}
