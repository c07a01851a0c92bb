#pragma once

// Truncated power series in z whose coefficients are exact polynomials in
// finitely many face weights x_{2j}. A series is known modulo z^{order+1}
// and modulo monomials of total weight degree > weight_bound; every
// operation propagates both bounds (binary operations keep the minimum).

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "irredmap/weight_polynomial.hpp"

namespace irredmap {

/// Active weight indices j (weights x_{2j}) together with the total
/// weight-degree truncation bound.
struct WeightSpace {
    std::vector<int> half_degrees;  // sorted, distinct
    int max_degree = 0;

    WeightSpace() = default;
    WeightSpace(std::vector<int> js, int max_deg);

    std::size_t arity() const { return half_degrees.size(); }
    /// Position of x_{2j} in monomials; throws std::invalid_argument if inactive.
    std::size_t position(int j) const;
    bool contains(int j) const;

    /// Same index set with a different degree bound.
    WeightSpace with_max_degree(int m) const { WeightSpace s = *this; s.max_degree = m; return s; }
    /// Union of index sets; the bound is kept from *this.
    WeightSpace with_indices(const std::vector<int>& extra) const;

    friend bool operator==(const WeightSpace&, const WeightSpace&) = default;
};

/// First coefficient where two series differ.
struct SeriesMismatch {
    int z_power;
    Monomial monomial;
    ExactScalar lhs;
    ExactScalar rhs;

    std::string describe(const WeightSpace& space) const;
};

class WeightedSeries {
public:
    WeightedSeries() = default;
    /// The zero series.
    WeightedSeries(WeightSpace space, int order);

    static WeightedSeries constant(WeightSpace space, int order, const ExactScalar& c);
    /// The series z.
    static WeightedSeries z(WeightSpace space, int order);
    /// The series x_{2j}.
    static WeightedSeries weight(WeightSpace space, int order, int j);
    /// Series with rational (weight-free) coefficients c[0..order].
    static WeightedSeries from_scalars(WeightSpace space, const std::vector<ExactScalar>& c);

    int order() const { return order_; }
    const WeightSpace& space() const { return space_; }
    int weight_bound() const { return space_.max_degree; }
    const std::vector<WeightPolynomial>& coeffs() const { return coeffs_; }
    const WeightPolynomial& operator[](int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }

    /// Coefficient of z^n times the given weight monomial.
    ExactScalar coefficient(int n, const Monomial& m) const;
    /// Coefficient of z^n with no weights.
    ExactScalar coefficient(int n) const;

    void set(int n, WeightPolynomial p);
    bool is_zero() const;

    /// Restriction to smaller bounds.
    WeightedSeries truncated(int order, int max_degree) const;
    WeightedSeries truncated(int order) const { return truncated(order, weight_bound()); }

    WeightedSeries& operator+=(const WeightedSeries& o);
    WeightedSeries& operator-=(const WeightedSeries& o);
    WeightedSeries& operator*=(const ExactScalar& c);
    WeightedSeries operator-() const;

    friend WeightedSeries operator+(WeightedSeries a, const WeightedSeries& b) { return a += b; }
    friend WeightedSeries operator-(WeightedSeries a, const WeightedSeries& b) { return a -= b; }
    friend WeightedSeries operator*(WeightedSeries a, const ExactScalar& c) { return a *= c; }
    friend WeightedSeries operator*(const WeightedSeries& a, const WeightedSeries& b);

    /// Exact equality including bounds and index set.
    friend bool operator==(const WeightedSeries& a, const WeightedSeries& b);

private:
    WeightSpace space_;
    int order_ = 0;
    std::vector<WeightPolynomial> coeffs_;
};

/// a + b, a * b and a^k with exact truncated ring arithmetic. Mismatched
/// weight-index sets throw std::invalid_argument.
WeightedSeries series_add(const WeightedSeries& a, const WeightedSeries& b);
WeightedSeries series_mul(const WeightedSeries& a, const WeightedSeries& b);
WeightedSeries series_pow(const WeightedSeries& s, long k);

/// d/dz; the result has order one less. Order-0 input throws.
WeightedSeries series_derive(const WeightedSeries& s);
/// k-fold d/dz.
WeightedSeries series_derive(const WeightedSeries& s, int k);

/// d/dx_{2j}; j must be active. The weight bound drops by one (the input
/// must have bound >= 1).
WeightedSeries weight_derive(const WeightedSeries& s, int j);

/// Multiplicative inverse; the z^0 coefficient must have a nonzero constant.
WeightedSeries series_inverse(const WeightedSeries& s);

/// Compares a and b after truncating both to their common bounds. Index
/// sets must match. Returns the first difference (lowest z power, then
/// monomial order) or nullopt when equal.
std::optional<SeriesMismatch> compare_series(const WeightedSeries& a, const WeightedSeries& b);

/// Canonical JSON form:
/// {"order": N, "coeffs": [[{"monomial": {"6": e6}, "num": "..", "den": ".."}, ...], ...]}
/// Monomial keys are face degrees 2j; only nonzero exponents are listed.
nlohmann::ordered_json series_to_json(const WeightedSeries& s);
/// Inverse of series_to_json; the weight space supplies index set and bound.
WeightedSeries series_from_json(const nlohmann::ordered_json& j, const WeightSpace& space);

/// Human-readable rendering, e.g. "1 + z + 2*x6*z^2".
std::string series_to_string(const WeightedSeries& s);

}  // namespace irredmap
