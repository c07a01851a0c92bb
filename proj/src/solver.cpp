#include "irredmap/solver.hpp"

namespace irredmap {

IrreducibilityOrder::IrreducibilityOrder(int b) : b_(b) {
    if (b < 0) throw std::invalid_argument("irreducibility order: b must be nonnegative");
}

IrreducibilityOrder IrreducibilityOrder::from_d(int d) {
    if (d < 0 || d % 2 != 0) throw std::invalid_argument("irreducibility order: d must be even and nonnegative");
    return IrreducibilityOrder(d / 2);
}

void require_admissible_weights(IrreducibilityOrder order, const WeightSpace& space) {
    for (int j : space.half_degrees) {
        if (j < order.min_half_degree()) {
            throw std::invalid_argument("weight x_" + std::to_string(2 * j) + " is not admissible for d = " +
                                        std::to_string(order.d()) + " (need degree > d)");
        }
    }
}

namespace {

// Coefficient of x_{2j} R^{j+b} in the U_b relation (b = 0: C(2j-1, j)).
Integer weight_coefficient(int b, int j) { return binomial(2 * j - 1, j + b); }

std::map<int, WeightedSeries> compute_Z(IrreducibilityOrder order, const WeightedSeries& R) {
    std::map<int, WeightedSeries> Z;
    const int b = order.b();
    for (int j : R.space().half_degrees) {
        WeightedSeries x = WeightedSeries::weight(R.space(), R.order(), j);
        Z.emplace(j, x * series_pow(R, j + b) * ExactScalar(weight_coefficient(b, j)));
    }
    return Z;
}

WeightedSeries sum_of(const std::map<int, WeightedSeries>& Z, const WeightSpace& space, int n) {
    WeightedSeries s(space, n);
    for (const auto& [j, z] : Z) s += z;
    return s;
}

// compositions[n] = sum over compositions of n into parts 1..max_part of prod U_{part}.
std::vector<WeightedSeries> composition_sums(const std::vector<WeightedSeries>& U, int max_part, int upto,
                                             const WeightSpace& space, int n_order) {
    std::vector<WeightedSeries> C;
    C.push_back(WeightedSeries::constant(space, n_order, 1));
    for (int n = 1; n <= upto; ++n) {
        WeightedSeries acc(space, n_order);
        for (int part = 1; part <= std::min(n, max_part); ++part) acc += U[static_cast<std::size_t>(part)] * C[static_cast<std::size_t>(n - part)];
        C.push_back(std::move(acc));
    }
    return C;
}

int iteration_cap(IrreducibilityOrder order, const WeightSpace& space, int n) {
    return (n + space.max_degree + 2) * (order.b() + 2) + 8;
}

void check_residual(IrreducibilityOrder order, const WeightedSeries& R) {
    const WeightedSeries res = algebraic_residual(order, R);
    if (!res.is_zero()) {
        throw ResidualError("R^(" + std::to_string(order.d()) + ") fails its algebraic equation: " +
                            series_to_string(res));
    }
}

}  // namespace

WeightedSeries algebraic_residual(IrreducibilityOrder order, const WeightedSeries& R) {
    const int b = order.b();
    const auto& space = R.space();
    const int n = R.order();
    WeightedSeries res = WeightedSeries::z(space, n);
    if (b == 0) {
        res -= R;
        for (int j : space.half_degrees) {
            res += WeightedSeries::weight(space, n, j) * series_pow(R, j) * ExactScalar(weight_coefficient(0, j));
        }
        return res;
    }
    for (int l = 0; l <= b; ++l) {
        Integer c = binomial(b + l, 2 * l) * catalan(l);
        if ((b - l) % 2 != 0) c = -c;
        res += series_pow(R, b - l) * ExactScalar(c);
    }
    for (int j : space.half_degrees) {
        res += WeightedSeries::weight(space, n, j) * series_pow(R, b + j) * ExactScalar(weight_coefficient(b, j));
    }
    return res;
}

SliceSystem solve_slice_system(IrreducibilityOrder order, const WeightSpace& space, int n) {
    require_admissible_weights(order, space);
    if (n < 0) throw std::invalid_argument("solve: truncation order must be nonnegative");
    const int b = order.b();
    const int cap = iteration_cap(order, space, n);
    const WeightedSeries z = WeightedSeries::z(space, n);
    const WeightedSeries one = WeightedSeries::constant(space, n, 1);

    SliceSystem sys;
    if (b <= 1) {
        // b = 1: R = 1 + z + sum Z_j;  b = 0: R = z + sum Z_j.
        const WeightedSeries base = b == 1 ? one + z : z;
        WeightedSeries R = b == 1 ? one : WeightedSeries(space, n);
        bool stationary = false;
        for (int it = 0; it < cap && !stationary; ++it) {
            WeightedSeries next = base + sum_of(compute_Z(order, R), space, n);
            stationary = next == R;
            R = std::move(next);
        }
        if (!stationary) throw ResidualError("slice fixed point did not stabilise");
        sys.Z = compute_Z(order, R);
        if (b == 1) {
            sys.U = {R - one, sum_of(sys.Z, space, n)};
        }
        sys.R = std::move(R);
    } else {
        // Unknowns U_1..U_{b-1}; U_0 = U_1 and U_b = sum Z_j.
        std::vector<WeightedSeries> U(static_cast<std::size_t>(b) + 1, WeightedSeries(space, n));
        bool stationary = false;
        for (int it = 0; it < cap && !stationary; ++it) {
            const WeightedSeries R = one + U[1];
            const auto Z = compute_Z(order, R);
            const auto C = composition_sums(U, b - 1, b, space, n);
            std::vector<WeightedSeries> next(U.size(), WeightedSeries(space, n));
            for (int k = 1; k <= b - 2; ++k) next[static_cast<std::size_t>(k)] = C[static_cast<std::size_t>(k + 1)];
            next[static_cast<std::size_t>(b - 1)] = C[static_cast<std::size_t>(b)] + z + sum_of(Z, space, n);
            stationary = true;
            for (int k = 1; k <= b - 1; ++k) {
                if (!(next[static_cast<std::size_t>(k)] == U[static_cast<std::size_t>(k)])) stationary = false;
            }
            U = std::move(next);
        }
        if (!stationary) throw ResidualError("slice fixed point did not stabilise");
        sys.R = one + U[1];
        sys.Z = compute_Z(order, sys.R);
        U[0] = U[1];
        U[static_cast<std::size_t>(b)] = sum_of(sys.Z, space, n);
        sys.U = std::move(U);
    }
    check_residual(order, sys.R);
    return sys;
}

WeightedSeries solve_R(IrreducibilityOrder order, const WeightSpace& space, int n) {
    return solve_slice_system(order, space, n).R;
}

WeightedSeries solve_R_newton(IrreducibilityOrder order, const WeightSpace& space, int n) {
    require_admissible_weights(order, space);
    if (n < 0) throw std::invalid_argument("solve: truncation order must be nonnegative");
    const int b = order.b();
    WeightedSeries R = WeightedSeries::constant(space, n, b == 0 ? 0 : 1);

    auto derivative_in_R = [&](const WeightedSeries& r) {
        WeightedSeries d(space, n);
        if (b == 0) {
            d -= WeightedSeries::constant(space, n, 1);
            for (int j : space.half_degrees) {
                d += WeightedSeries::weight(space, n, j) * series_pow(r, j - 1) *
                     ExactScalar(weight_coefficient(0, j) * j);
            }
            return d;
        }
        for (int l = 0; l < b; ++l) {
            Integer c = binomial(b + l, 2 * l) * catalan(l) * (b - l);
            if ((b - l) % 2 != 0) c = -c;
            d += series_pow(r, b - l - 1) * ExactScalar(c);
        }
        for (int j : space.half_degrees) {
            d += WeightedSeries::weight(space, n, j) * series_pow(r, b + j - 1) *
                 ExactScalar(weight_coefficient(b, j) * (b + j));
        }
        return d;
    };

    // Quadratic convergence in the (z, x)-adic sense: the error degree doubles each step.
    for (int it = 0; it < 64; ++it) {
        const WeightedSeries res = algebraic_residual(order, R);
        if (res.is_zero()) return R;
        R -= res * series_inverse(derivative_in_R(R));
    }
    check_residual(order, R);
    return R;
}

std::vector<std::pair<std::string, WeightedSeries>> slice_system_residuals(IrreducibilityOrder order,
                                                                           const SliceSystem& sys) {
    std::vector<std::pair<std::string, WeightedSeries>> out;
    const int b = order.b();
    const auto& space = sys.R.space();
    const int n = sys.R.order();
    const WeightedSeries z = WeightedSeries::z(space, n);
    const WeightedSeries one = WeightedSeries::constant(space, n, 1);
    if (b == 0) {
        WeightedSeries res = sys.R - z - sum_of(sys.Z, space, n);
        out.emplace_back("R = z + sum Z_j", std::move(res));
        return out;
    }
    if (sys.U.size() != static_cast<std::size_t>(b) + 1) throw std::invalid_argument("slice system: expected U_0..U_b");
    const auto C = composition_sums(sys.U, b, b, space, n);
    for (int k = 0; k <= b - 1; ++k) {
        WeightedSeries res = sys.U[static_cast<std::size_t>(k)] - C[static_cast<std::size_t>(k + 1)];
        if (k == b - 1) res -= z;
        out.emplace_back("U_" + std::to_string(k) + " recursion", std::move(res));
    }
    WeightedSeries ub = sys.U[static_cast<std::size_t>(b)];
    for (int j : space.half_degrees) {
        ub -= WeightedSeries::weight(space, n, j) * series_pow(sys.R, j + b) * ExactScalar(weight_coefficient(b, j));
    }
    out.emplace_back("U_b relation", std::move(ub));
    out.emplace_back("R = 1 + U_0", sys.R - one - sys.U[0]);
    return out;
}

}  // namespace irredmap
