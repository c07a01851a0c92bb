#pragma once

// Solvers for the fundamental series R^(d) and the slice series U_k^(d).
//
// For b >= 1 the slice system is
//   U_k = z [k = b-1] + sum over compositions (k_1..k_q) of k+1 into parts >= 1 of prod U_{k_i},
//   U_b = sum_j C(2j-1, j+b) x_{2j} R^{j+b},     R = 1 + U_0,
// and R alone satisfies the algebraic equation
//   z + sum_{l=0}^{b} (-1)^{b-l} C(b+l, 2l) Cat(l) R^{b-l} + sum_j C(2j-1, j+b) x_{2j} R^{b+j} = 0.
// For b = 0 (general bipartite maps, z counting vertices) the system is
//   R = z + sum_j C(2j-1, j) x_{2j} R^j.

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "irredmap/series.hpp"

namespace irredmap {

/// d = 2b; b = 0 encodes general (non-irreducible) bipartite maps.
class IrreducibilityOrder {
public:
    explicit IrreducibilityOrder(int b);
    static IrreducibilityOrder from_d(int d);

    int b() const { return b_; }
    int d() const { return 2 * b_; }
    /// Smallest admissible boundary / weighted face half-degree, b + 1.
    int min_half_degree() const { return b_ + 1; }

    friend bool operator==(IrreducibilityOrder, IrreducibilityOrder) = default;

private:
    int b_;
};

/// Raised when a solved series fails its defining equation. This is an
/// internal fault, never an expected outcome.
class ResidualError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

struct SliceSystem {
    WeightedSeries R;
    /// U_0..U_b for b >= 1; empty for b = 0.
    std::vector<WeightedSeries> U;
    /// Z_j keyed by active half-degree j.
    std::map<int, WeightedSeries> Z;
};

/// Left-hand side of the algebraic equation for R (b >= 1), or
/// R - z - sum_j C(2j-1,j) x_{2j} R^j for b = 0. Zero iff R solves it.
WeightedSeries algebraic_residual(IrreducibilityOrder order, const WeightedSeries& R);

/// Fixed-point solution of the slice system, iterated from the constant
/// solution until exactly stationary, then checked against the algebraic
/// equation. Throws ResidualError if the check fails.
SliceSystem solve_slice_system(IrreducibilityOrder order, const WeightSpace& space, int order_N);

/// R^(d) to order N: the R of solve_slice_system, residual-checked.
WeightedSeries solve_R(IrreducibilityOrder order, const WeightSpace& space, int order_N);

/// Newton iteration on the algebraic equation (b >= 1) or on the b = 0
/// equation, starting from R = 1 (resp. 0). Independent of the slice
/// system; must agree with solve_R.
WeightedSeries solve_R_newton(IrreducibilityOrder order, const WeightSpace& space, int order_N);

/// Residuals of every equation of the full slice system (recursive U_k
/// equations for 0 <= k <= b-1, the U_b relation and R = 1 + U_0), named.
std::vector<std::pair<std::string, WeightedSeries>> slice_system_residuals(IrreducibilityOrder order,
                                                                           const SliceSystem& system);

/// Checks that every active index is admissible (j >= b+1).
void require_admissible_weights(IrreducibilityOrder order, const WeightSpace& space);

}  // namespace irredmap
