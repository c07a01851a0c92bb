#pragma once

// Generating functions of d-irreducible bipartite maps with boundaries and
// the census formulas derived from them.
//
// Conventions: boundaries are ordered, each carries a marked oriented edge
// with the boundary face on its right. z weights inner faces of degree d
// (vertices when b = 0); x_{2j} weights inner faces of degree 2j > d.

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "irredmap/solver.hpp"

namespace irredmap {

/// Raised when a census formula is evaluated outside the range where it
/// holds (fewer than two faces of degree > d).
class ValidityError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Ordered boundary half-degrees j_1..j_r, each at least b+1.
class BoundarySpec {
public:
    BoundarySpec(IrreducibilityOrder order, std::vector<int> half_degrees);

    IrreducibilityOrder order() const { return order_; }
    const std::vector<int>& half_degrees() const { return js_; }
    int r() const { return static_cast<int>(js_.size()); }
    /// (r-2) b + sum j_l, the power of R in the multi-boundary formula.
    long exponent() const;
    /// prod_l 2 j_l C(2 j_l - 1, j_l + b).
    Integer marking_prefactor() const;

private:
    IrreducibilityOrder order_;
    std::vector<int> js_;
};

/// Root half-degree m and counts q_j of non-root faces of degree 2j.
/// F and E are always derived, never stored.
class FaceProfile {
public:
    FaceProfile(int m, std::map<int, long> q);

    int m() const { return m_; }
    const std::map<int, long>& q() const { return q_; }
    long count(int j) const;
    /// 1 + sum_j q_j.
    long faces() const;
    /// m + sum_j j q_j.
    long edges() const;
    /// From Euler's relation on the sphere: E + 2 - F.
    long vertices() const { return edges() + 2 - faces(); }

    std::string to_string() const;

private:
    int m_;
    std::map<int, long> q_;
};

// ---- generating functions -------------------------------------------------

WeightedSeries gf_two_boundaries(IrreducibilityOrder order, int j1, int j2, const WeightedSeries& R);
WeightedSeries gf_two_boundaries(IrreducibilityOrder order, int j1, int j2, const WeightSpace& space, int n);

/// Main multi-boundary formula, r >= 2. Given R to order N the result has
/// order N - (r-2); N < r-2 throws.
WeightedSeries gf_multi_boundaries(const BoundarySpec& spec, const WeightedSeries& R);
/// Solves R internally at order n + r - 2 so the result has order n.
WeightedSeries gf_multi_boundaries(const BoundarySpec& spec, const WeightSpace& space, int n);

/// dF_{2j1}/dz = C(2 j1, j1 - b) R^{j1 - b}.
WeightedSeries pointing_series(IrreducibilityOrder order, int j1, const WeightedSeries& R);
WeightedSeries pointing_series(IrreducibilityOrder order, int j1, const WeightSpace& space, int n);

/// z-derivative form of the multi-boundary formula, valid for r >= 1:
/// 1/((r-2)b + sum j) prod 2j C(2j-1, j+b) d^{r-1}/dz^{r-1} R^{(r-2)b + sum j}.
/// Result order is R.order() - (r-1).
WeightedSeries gf_multi_boundaries_z_derivative(const BoundarySpec& spec, const WeightedSeries& R);

/// The b = 0 formulas for general bipartite maps written with their own
/// binomials C(2j-1, j); R must solve R = z + sum C(2j-1,j) x_{2j} R^j.
WeightedSeries bipartite_two_boundaries(int j1, int j2, const WeightedSeries& R);
WeightedSeries bipartite_multi_boundaries(const std::vector<int>& js, const WeightedSeries& R);

// ---- census counts ----------------------------------------------------------

/// Rooted d-irreducible bipartite maps with root face 2m and q_j inner faces
/// of degree 2j (j >= b). For b = 0 the profile lists j >= 1 and vertices
/// play the role of degree-0 faces. Throws ValidityError if F < 2 + q_b.
Integer count_profile(IrreducibilityOrder order, const FaceProfile& profile);

/// Rooted bipartite maps without multiple edges (girth >= 4); q_1 must be 0.
Integer count_simple_bipartite(const FaceProfile& profile);
/// Rooted 2m-angulations without multiple edges with F >= 2 faces.
Integer count_2m_angulations_simple(int m, long faces);
/// Rooted quadrangulations without multiple edges, F >= 1 faces.
Integer count_quadrangulations_simple(long faces);

/// Rooted 4-irreducible maps (m >= 3), via scaled_power_coefficient.
Integer count_4irreducible(const FaceProfile& profile);
/// Same count through the terminating 2F1 at argument -1.
Integer count_4irreducible_hypergeometric(const FaceProfile& profile);
/// Rooted 4-irreducible maps whose only faces of degree > 4 are the root
/// face (2m) and one other face (2m'), with q2 squares.
Integer count_two_large_faces_4irr(int m, int m_prime, long q2);

/// Rooted maps of girth >= 6 (q_2 must be 0).
Integer count_girth6(const FaceProfile& profile);
/// Rooted hexangulations of girth 6 with F >= 2 faces.
Integer count_hexangulations_girth6(long faces);

/// Rooted bipartite maps (no irreducibility constraint), profile over j >= 1.
Integer count_bipartite_tutte(const FaceProfile& profile);

/// {formula, parameters, value} record used by exports.
struct FormulaRecord {
    std::string formula;
    nlohmann::ordered_json parameters;
    Integer value;
};

nlohmann::ordered_json to_json(const FormulaRecord& r);

}  // namespace irredmap
