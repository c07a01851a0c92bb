#include <doctest.h>

#include "irredmap/series.hpp"

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

}  // namespace

TEST_CASE("weight space positions") {
    const WeightSpace s({5, 3, 3}, 2);
    CHECK(s.half_degrees == std::vector<int>{3, 5});
    CHECK(s.position(5) == 1);
    CHECK(s.contains(3));
    CHECK_FALSE(s.contains(4));
    CHECK_THROWS_AS(s.position(4), std::invalid_argument);
    CHECK(s.with_indices({4}).half_degrees == std::vector<int>{3, 4, 5});
}

TEST_CASE("ring arithmetic on weight-free series") {
    const WeightSpace none({}, 0);
    const auto one_plus_z = WeightedSeries::constant(none, 6, 1) + WeightedSeries::z(none, 6);
    CHECK(scalars(one_plus_z * one_plus_z) == ints({1, 2, 1, 0, 0, 0, 0}));
    CHECK(scalars(series_pow(one_plus_z, 4)) == ints({1, 4, 6, 4, 1, 0, 0}));
    CHECK(series_pow(one_plus_z, 4) == series_mul(series_mul(one_plus_z, one_plus_z), series_mul(one_plus_z, one_plus_z)));
    CHECK(scalars(series_pow(WeightedSeries::z(none, 4) * ExactScalar(7), 0)) == ints({1, 0, 0, 0, 0}));
    CHECK(series_add(one_plus_z, -one_plus_z).is_zero());
}

TEST_CASE("mixed truncation keeps the minimum order") {
    const WeightSpace none({}, 0);
    const auto a = WeightedSeries::constant(none, 6, 1);
    const auto b = WeightedSeries::z(none, 3);
    CHECK((a + b).order() == 3);
    CHECK((a * b).order() == 3);
    CHECK(a.truncated(2).order() == 2);
    CHECK_THROWS(a.truncated(7));
}

TEST_CASE("mismatched weight index sets are rejected") {
    const auto a = WeightedSeries::weight(WeightSpace({3}, 2), 3, 3);
    const auto b = WeightedSeries::weight(WeightSpace({4}, 2), 3, 4);
    CHECK_THROWS_AS(series_add(a, b), std::invalid_argument);
    CHECK_THROWS_AS(series_mul(a, b), std::invalid_argument);
    CHECK_THROWS_AS(compare_series(a, b), std::invalid_argument);
}

TEST_CASE("z derivatives") {
    const WeightSpace none({}, 0);
    const auto one_plus_z = WeightedSeries::constant(none, 4, 1) + WeightedSeries::z(none, 4);
    CHECK(scalars(series_derive(series_pow(one_plus_z, 4))) == ints({4, 12, 12, 4}));
    CHECK(series_derive(WeightedSeries::constant(none, 3, 5)).is_zero());
    const auto z3 = series_pow(WeightedSeries::z(none, 3), 3);
    CHECK(scalars(series_derive(z3, 2)) == ints({0, 6}));
    CHECK(series_derive(z3, 0) == z3);
    CHECK_THROWS(series_derive(WeightedSeries::z(none, 0)));
}

TEST_CASE("weight derivatives") {
    const WeightSpace x6({3}, 3);
    const auto z = WeightedSeries::z(x6, 3);
    const auto x = WeightedSeries::weight(x6, 3, 3);
    CHECK(weight_derive(x * z, 3) == WeightedSeries::z(x6.with_max_degree(2), 3));
    CHECK(weight_derive(z * z, 3).is_zero());
    const auto d = weight_derive(x * x * z * z, 3);
    CHECK(d.coefficient(2, {1}) == ExactScalar(2));
    CHECK(d.coefficient(2, {0}) == ExactScalar(0));
    CHECK_THROWS_AS(weight_derive(z, 4), std::invalid_argument);
    CHECK_THROWS(weight_derive(WeightedSeries::z(x6.with_max_degree(0), 3), 3));
}

TEST_CASE("weight degree truncation") {
    const WeightSpace x6({3}, 2);
    const auto x = WeightedSeries::weight(x6, 2, 3);
    const auto x3 = series_pow(x, 3);
    CHECK(x3.is_zero());
    CHECK(series_pow(x, 2).coefficient(0, {2}) == ExactScalar(1));
}

TEST_CASE("inverse of 1 - z - x6 z") {
    const WeightSpace x6({3}, 3);
    const auto one = WeightedSeries::constant(x6, 5, 1);
    const auto s = one - WeightedSeries::z(x6, 5) - WeightedSeries::weight(x6, 5, 3) * WeightedSeries::z(x6, 5);
    const auto inv = series_inverse(s);
    CHECK(inv * s == one);
    // [z^3] 1/(1 - (1+x)z) = (1+x)^3 -> coefficient of x^2 is 3.
    CHECK(inv.coefficient(3, {2}) == ExactScalar(3));
    CHECK_THROWS(series_inverse(WeightedSeries::z(x6, 3)));
}

TEST_CASE("compare_series reports the first difference") {
    const WeightSpace x6({3}, 2);
    const auto a = WeightedSeries::z(x6, 4);
    const auto b = a + WeightedSeries::weight(x6, 4, 3) * WeightedSeries::z(x6, 4) * WeightedSeries::z(x6, 4);
    CHECK_FALSE(compare_series(a, a).has_value());
    const auto mismatch = compare_series(a, b);
    REQUIRE(mismatch.has_value());
    CHECK(mismatch->z_power == 2);
    CHECK(mismatch->monomial == Monomial{1});
    CHECK(mismatch->lhs == ExactScalar(0));
    CHECK(mismatch->rhs == ExactScalar(1));
    CHECK(mismatch->describe(x6).find("z^2") != std::string::npos);
}

TEST_CASE("JSON round trip is exact") {
    const WeightSpace space({3, 5}, 3);
    auto s = WeightedSeries::constant(space, 4, ExactScalar::fraction(-7, 3));
    s += WeightedSeries::weight(space, 4, 3) * WeightedSeries::z(space, 4) * ExactScalar(Integer("123456789012345678901234567890"));
    s += series_pow(WeightedSeries::weight(space, 4, 5) + WeightedSeries::z(space, 4), 3);
    const auto j = series_to_json(s);
    CHECK(j["order"] == 4);
    const auto back = series_from_json(j, space);
    CHECK(back == s);
    CHECK(series_to_json(back).dump() == j.dump());
    CHECK(j["coeffs"][0][0]["num"] == "-7");
    CHECK(j["coeffs"][0][0]["den"] == "3");
    CHECK(j["coeffs"][1].dump().find("\"6\":1") != std::string::npos);
}

TEST_CASE("string rendering") {
    const WeightSpace x6({3}, 2);
    const auto s = WeightedSeries::constant(x6, 2, 1) + WeightedSeries::z(x6, 2) +
                   WeightedSeries::weight(x6, 2, 3) * series_pow(WeightedSeries::z(x6, 2), 2) * ExactScalar(2);
    CHECK(series_to_string(s) == "1 + z + 2*x6*z^2 + O(z^3)");
    CHECK(series_to_string(WeightedSeries(x6, 2)) == "0 + O(z^3)");
}
