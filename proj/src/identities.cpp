#include "irredmap/identities.hpp"

#include <algorithm>

namespace irredmap {

bool IdentityReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

const IdentityCheck* IdentityReport::find(const std::string& name) const {
    for (const auto& c : checks) {
        if (c.name == name) return &c;
    }
    return nullptr;
}

namespace {

class Comparator {
public:
    Comparator(IdentityReport& report, int n, int m) : report_(report), n_(n), m_(m) {}

    void operator()(const std::string& name, const WeightedSeries& lhs, const WeightedSeries& rhs) {
        IdentityCheck check{name, false, {}};
        if (lhs.order() < n_ || rhs.order() < n_ || lhs.weight_bound() < m_ || rhs.weight_bound() < m_) {
            check.detail = "insufficient precision for the requested bounds";
        } else {
            const auto a = lhs.truncated(n_, m_);
            const auto b = rhs.truncated(n_, m_);
            if (auto mismatch = compare_series(a, b)) {
                check.detail = mismatch->describe(a.space());
            } else {
                check.passed = true;
            }
        }
        report_.checks.push_back(std::move(check));
    }

private:
    IdentityReport& report_;
    int n_;
    int m_;
};

WeightedSeries mark_faces(WeightedSeries s, const std::vector<int>& js, std::size_t from, bool with_edge_factor) {
    for (std::size_t l = from; l < js.size(); ++l) {
        s = weight_derive(s, js[l]);
        if (with_edge_factor) s *= ExactScalar(2 * js[l]);
    }
    return s;
}

}  // namespace

IdentityReport verify_identities(const BoundarySpec& spec, const WeightSpace& space, int n) {
    const int r = spec.r();
    if (r < 2) throw std::invalid_argument("verify_identities needs r >= 2");
    const IrreducibilityOrder order = spec.order();
    const int b = order.b();
    const auto& js = spec.half_degrees();

    const WeightSpace work = space.with_indices(std::vector<int>(js.begin() + 1, js.end()))
                                 .with_max_degree(space.max_degree + r - 1);
    const int work_n = n + r;
    const WeightedSeries R = solve_R(order, work, work_n);

    IdentityReport report;
    Comparator check(report, n, space.max_degree);

    const WeightedSeries main = gf_multi_boundaries(spec, R);
    const WeightedSeries two = gf_two_boundaries(order, js[0], js[1], R);
    check(r == 2 ? "two-boundary reduction" : "marking derivatives", mark_faces(two, js, 2, true), main);

    if (r >= 3) {
        long tail = 0;
        for (std::size_t l = 2; l < js.size(); ++l) tail += js[l] + b;
        const WeightedSeries head_power = series_pow(R, js[0] + js[1]);
        const WeightedSeries tail_power = series_pow(R, tail);
        WeightedSeries sum(work, work_n - (r - 2));
        for (int p = 1; p <= r - 2; ++p) {
            sum += series_derive(head_power, p) * series_derive(tail_power, r - p - 2) *
                   ExactScalar(binomial(r - 3, p - 1));
        }
        ExactScalar c = ExactScalar(js[0] + js[1]);
        c /= ExactScalar(spec.exponent());
        check("Leibniz collapse", sum, series_derive(series_pow(R, spec.exponent()), r - 2) * c);

        Integer tail_binomials = 1;
        for (std::size_t l = 2; l < js.size(); ++l) tail_binomials *= binomial(2 * js[l] - 1, js[l] + b);
        check("tree/forest decomposition", mark_faces(head_power, js, 2, false), sum * ExactScalar(tail_binomials));
    }

    const WeightedSeries z_form = gf_multi_boundaries_z_derivative(spec, R);
    check("z-derivative form", series_derive(main), z_form);

    const BoundarySpec single(order, {js[0]});
    const WeightedSeries pointing = pointing_series(order, js[0], R);
    check("pointing formula at r=1", gf_multi_boundaries_z_derivative(single, R), pointing);
    check("pointing marking route", mark_faces(pointing, js, 1, true), z_form);

    if (b == 0) {
        const WeightedSeries R_newton = solve_R_newton(order, work, work_n);
        check("bipartite two-boundary form", two, bipartite_two_boundaries(js[0], js[1], R_newton));
        check("bipartite multi-boundary form", main, bipartite_multi_boundaries(js, R_newton));
    }
    return report;
}

}  // namespace irredmap
