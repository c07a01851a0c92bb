// Acceptance run: one PASS/FAIL line per criterion.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "irredmap/census.hpp"
#include "irredmap/identities.hpp"
#include "irredmap/maps.hpp"
#include "irredmap/trees.hpp"

using namespace irredmap;

namespace {

struct Result {
    bool passed = true;
    std::ostringstream note;

    void expect(bool ok, const std::string& what) {
        if (!ok && passed) note << "first failure: " << what;
        passed = passed && ok;
    }
};

Result sequence_two_hex() {
    Result r;
    const long expected[] = {1, 6, 21, 62, 180, 540, 1683, 5418, 17901, 60390, 207207, 720954, 2537964, 9023328};
    for (long q2 = 0; q2 <= 13; ++q2) {
        r.expect(count_two_large_faces_4irr(3, 3, q2) == expected[q2], "q2=" + std::to_string(q2));
    }
    r.note << "q2 = 0..13";
    return r;
}

Result sequence_hexangulations() {
    Result r;
    const char* expected[] = {"1",       "3",        "17",        "128",        "1131",      "11070",
                              "116317",  "1287480",  "14829188",  "176250143",  "2148687567"};
    for (long F = 2; F <= 12; ++F) {
        r.expect(count_hexangulations_girth6(F) == Integer(expected[F - 2]), "F=" + std::to_string(F));
    }
    r.note << "F = 2..12";
    return r;
}

Result quadrangulations() {
    Result r;
    r.expect(count_quadrangulations_simple(1) == 2, "F=1 formula");
    const IrreducibilityOrder simple(1);
    for (long F = 2; F <= 3; ++F) {
        const FaceProfile p(2, {{2, F - 1}});
        if (p.edges() > oracle_edge_ceiling()) continue;
        const Integer oracle = census_count(simple, p);
        const Integer formula = count_quadrangulations_simple(F);
        r.expect(oracle == formula, "F=" + std::to_string(F));
        r.note << "F=" << F << " (E=" << p.edges() << "): " << formula << "; ";
    }
    r.note << "F=1: " << count_quadrangulations_simple(1);
    return r;
}

Result two_hexagons() {
    Result r;
    const IrreducibilityOrder order(2);
    const long expected[] = {1, 6, 21};
    for (long q2 = 0; q2 <= 2; ++q2) {
        const FaceProfile p(3, {{3, 1}, {2, q2}});
        const std::string tag = "q2=" + std::to_string(q2);
        if (p.edges() > oracle_edge_ceiling()) {
            r.expect(false, tag + " above the oracle ceiling");
            continue;
        }
        const Integer oracle = census_count(order, p);
        r.expect(oracle == expected[q2], tag + " oracle");
        r.expect(count_two_large_faces_4irr(3, 3, q2) == expected[q2], tag + " formula");
        r.expect(count_profile(order, p) == expected[q2], tag + " profile formula");
        r.note << oracle << (q2 < 2 ? ", " : "");
    }
    return r;
}

Result tutte() {
    Result r;
    const auto tally = oracle_census(IrreducibilityOrder(0), 2);
    Integer total = 0;
    for (const auto& [key, n] : tally) {
        const FaceProfile p(key.first, key.second);
        const Integer formula = count_bipartite_tutte(p);
        r.expect(formula == n, p.to_string());
        total += formula;
    }
    r.expect(total == 3 && count_rooted_maps(2, true) == 3, "total");
    r.expect(count_bipartite_tutte(FaceProfile(2, {})) == 2, "m=2");
    r.expect(count_bipartite_tutte(FaceProfile(1, {{1, 1}})) == 1, "m=1,q1=1");
    r.note << "total " << total << " over " << tally.size() << " profiles";
    return r;
}

Result residuals() {
    Result r;
    for (int b = 1; b <= 3; ++b) {
        const IrreducibilityOrder order(b);
        const WeightSpace space({b + 1}, 3);
        const auto R = solve_R(order, space, 20);
        r.expect(algebraic_residual(order, R).is_zero(), "b=" + std::to_string(b));
    }
    r.note << "b = 1..3, N = 20, M = 3";
    return r;
}

Result identities() {
    Result r;
    int checks = 0;
    for (int b = 0; b <= 2; ++b) {
        const WeightSpace space({b + 1}, 2);
        for (int n_boundaries = 2; n_boundaries <= 4; ++n_boundaries) {
            const BoundarySpec spec(IrreducibilityOrder(b), std::vector<int>(static_cast<std::size_t>(n_boundaries), b + 1));
            const auto report = verify_identities(spec, space, 6);
            for (const auto& c : report.checks) {
                ++checks;
                r.expect(c.passed, "b=" + std::to_string(b) + " r=" + std::to_string(n_boundaries) + " " + c.name + ": " +
                                       c.detail);
            }
        }
    }
    r.note << checks << " identity checks";
    return r;
}

Result trees() {
    Result r;
    std::size_t coefficients = 0, tallies = 0;
    for (int b = 0; b <= 3; ++b) {
        const IrreducibilityOrder order(b);
        const WeightSpace space({b + 1}, 2);
        const auto series = verify_tree_series(order, space, 6);
        const auto listing = verify_tree_listing(order, space, 6, 12);
        if (const auto* bad = series.first_failure()) r.expect(false, bad->describe());
        if (const auto* bad = listing.first_failure()) r.expect(false, bad->describe());
        r.expect(!series.checks.empty() && !listing.checks.empty(), "b=" + std::to_string(b) + " empty report");
        coefficients += series.checks.size();
        tallies += listing.checks.size();
    }
    r.note << coefficients << " coefficients, " << tallies << " listing tallies";
    return r;
}

Result hypergeometric() {
    Result r;
    const WeightSpace none({}, 0);
    const auto r4 = solve_R(IrreducibilityOrder(2), none, 30);
    auto power = WeightedSeries::constant(none, 30, 1);
    for (long p = 1; p <= 30; ++p) {
        power = power * r4;
        for (long s = 0; s <= 30; ++s) {
            ExactScalar direct = ExactScalar(factorial(s)) * power.coefficient(static_cast<int>(s));
            direct /= ExactScalar(p);
            ExactScalar via_2f1 = ExactScalar::fraction(1, p);
            if (s > 0) {
                via_2f1 = ExactScalar(factorial(2 * (s - 1)));
                via_2f1 /= ExactScalar(factorial(s - 1));
                via_2f1 *= hypergeometric_2f1_terminating(1 - p, 1 - s, 2 * (1 - s), -1);
            }
            const std::string tag = "p=" + std::to_string(p) + " s=" + std::to_string(s);
            r.expect(scaled_power_coefficient(p, s) == direct, tag + " binomial line");
            r.expect(via_2f1 == direct, tag + " 2F1 line");
        }
    }
    r.note << "1 <= p <= 30, 0 <= s <= 30";
    return r;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Result()>>> criteria = {
        {"two large faces sequence", sequence_two_hex},
        {"girth-6 hexangulation sequence", sequence_hexangulations},
        {"simple quadrangulations vs oracle", quadrangulations},
        {"two hexagons with squares vs oracle", two_hexagons},
        {"Tutte cross-check at E = 2", tutte},
        {"algebraic residual of R", residuals},
        {"identity suite", identities},
        {"tree grammar equivalence", trees},
        {"hypergeometric equivalence", hypergeometric},
    };
    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Result r;
        try {
            r = criteria[i].second();
        } catch (const std::exception& e) {
            r.passed = false;
            r.note << "exception: " << e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        all = all && r.passed;
        std::cout << "criterion " << i + 1 << ": " << (r.passed ? "PASS" : "FAIL") << "  " << criteria[i].first << "  ["
                  << r.note.str() << "] " << std::fixed << std::setprecision(2) << secs << " s" << std::endl;
    }
    return all ? 0 : 1;
}
