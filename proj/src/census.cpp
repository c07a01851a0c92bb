#include "irredmap/census.hpp"

#include <numeric>
#include <sstream>

namespace irredmap {

BoundarySpec::BoundarySpec(IrreducibilityOrder order, std::vector<int> half_degrees)
    : order_(order), js_(std::move(half_degrees)) {
    if (js_.empty()) throw std::invalid_argument("boundary spec: at least one boundary required");
    for (int j : js_) {
        if (j < order_.min_half_degree()) {
            throw std::invalid_argument("boundary of degree " + std::to_string(2 * j) +
                                        " must exceed d = " + std::to_string(order_.d()));
        }
    }
}

long BoundarySpec::exponent() const {
    const long sum = std::accumulate(js_.begin(), js_.end(), 0L);
    return (r() - 2L) * order_.b() + sum;
}

Integer BoundarySpec::marking_prefactor() const {
    Integer p = 1;
    for (int j : js_) p *= 2 * j * binomial(2 * j - 1, j + order_.b());
    return p;
}

FaceProfile::FaceProfile(int m, std::map<int, long> q) : m_(m) {
    if (m < 1) throw std::invalid_argument("face profile: root half-degree must be >= 1");
    for (const auto& [j, c] : q) {
        if (c < 0) throw std::invalid_argument("face profile: negative face count");
        if (j < 0) throw std::invalid_argument("face profile: negative half-degree");
        if (c > 0) q_.emplace(j, c);
    }
}

long FaceProfile::count(int j) const {
    auto it = q_.find(j);
    return it == q_.end() ? 0 : it->second;
}

long FaceProfile::faces() const {
    long f = 1;
    for (const auto& [j, c] : q_) f += c;
    return f;
}

long FaceProfile::edges() const {
    long e = m_;
    for (const auto& [j, c] : q_) e += j * c;
    return e;
}

std::string FaceProfile::to_string() const {
    std::ostringstream os;
    os << "m=" << m_;
    for (const auto& [j, c] : q_) os << ",q" << j << "=" << c;
    return os.str();
}

namespace {

Integer exact_integer(const ExactScalar& v, const char* what) {
    if (!v.is_integer()) {
        throw std::logic_error(std::string(what) + " produced the non-integer value " + v.to_string());
    }
    return v.to_integer();
}

void require_half_degree(IrreducibilityOrder order, int j) {
    if (j < order.min_half_degree()) {
        throw std::invalid_argument("half-degree " + std::to_string(j) + " must exceed b = " +
                                    std::to_string(order.b()));
    }
}

// prod_{j in q, j > floor} C(2j-1, j+shift)^{q_j} / q_j!
ExactScalar face_product(const FaceProfile& p, int floor, int shift) {
    ExactScalar prod = 1;
    for (const auto& [j, c] : p.q()) {
        if (j <= floor) continue;
        Integer b;
        mpz_pow_ui(b.get_mpz_t(), binomial(2 * j - 1, j + shift).get_mpz_t(), static_cast<unsigned long>(c));
        prod *= ExactScalar(b);
        prod /= ExactScalar(factorial(c));
    }
    return prod;
}

Integer root_prefactor(int m, int shift) { return 2 * m * binomial(2 * m - 1, m + shift); }

void require_min_j(const FaceProfile& p, int min_j, const char* what) {
    for (const auto& [j, c] : p.q()) {
        if (j < min_j) {
            throw std::invalid_argument(std::string(what) + ": faces of half-degree " + std::to_string(j) +
                                        " are not allowed");
        }
    }
}

}  // namespace

WeightedSeries gf_two_boundaries(IrreducibilityOrder order, int j1, int j2, const WeightedSeries& R) {
    require_half_degree(order, j1);
    require_half_degree(order, j2);
    const int b = order.b();
    ExactScalar c = ExactScalar(2 * j1 * binomial(2 * j1 - 1, j1 + b) * 2 * j2 * binomial(2 * j2 - 1, j2 + b));
    c /= ExactScalar(j1 + j2);
    return series_pow(R, j1 + j2) * c;
}

WeightedSeries gf_two_boundaries(IrreducibilityOrder order, int j1, int j2, const WeightSpace& space, int n) {
    return gf_two_boundaries(order, j1, j2, solve_R(order, space, n));
}

WeightedSeries gf_multi_boundaries(const BoundarySpec& spec, const WeightedSeries& R) {
    const int r = spec.r();
    if (r < 2) throw std::invalid_argument("multi-boundary formula needs r >= 2 (use the pointing formula for r = 1)");
    if (R.order() < r - 2) {
        throw std::invalid_argument("truncation order " + std::to_string(R.order()) +
                                    " is exhausted by " + std::to_string(r - 2) + " z-derivatives");
    }
    const long e = spec.exponent();
    ExactScalar c = ExactScalar(spec.marking_prefactor());
    c /= ExactScalar(e);
    return series_derive(series_pow(R, e), r - 2) * c;
}

WeightedSeries gf_multi_boundaries(const BoundarySpec& spec, const WeightSpace& space, int n) {
    if (n < 0) throw std::invalid_argument("truncation order must be nonnegative");
    const int extra = std::max(spec.r() - 2, 0);
    return gf_multi_boundaries(spec, solve_R(spec.order(), space, n + extra));
}

WeightedSeries pointing_series(IrreducibilityOrder order, int j1, const WeightedSeries& R) {
    require_half_degree(order, j1);
    const int b = order.b();
    return series_pow(R, j1 - b) * ExactScalar(binomial(2 * j1, j1 - b));
}

WeightedSeries pointing_series(IrreducibilityOrder order, int j1, const WeightSpace& space, int n) {
    return pointing_series(order, j1, solve_R(order, space, n));
}

WeightedSeries gf_multi_boundaries_z_derivative(const BoundarySpec& spec, const WeightedSeries& R) {
    const int r = spec.r();
    if (R.order() < r - 1) throw std::invalid_argument("truncation order exhausted by z-derivatives");
    const long e = spec.exponent();
    ExactScalar c = ExactScalar(spec.marking_prefactor());
    c /= ExactScalar(e);
    return series_derive(series_pow(R, e), r - 1) * c;
}

WeightedSeries bipartite_two_boundaries(int j1, int j2, const WeightedSeries& R) {
    if (j1 < 1 || j2 < 1) throw std::invalid_argument("boundary half-degrees must be positive");
    ExactScalar c = ExactScalar(2 * j1 * binomial(2 * j1 - 1, j1) * 2 * j2 * binomial(2 * j2 - 1, j2));
    c /= ExactScalar(j1 + j2);
    return series_pow(R, j1 + j2) * c;
}

WeightedSeries bipartite_multi_boundaries(const std::vector<int>& js, const WeightedSeries& R) {
    if (js.size() < 2) throw std::invalid_argument("needs at least two boundaries");
    long sum = 0;
    Integer prefactor = 1;
    for (int j : js) {
        if (j < 1) throw std::invalid_argument("boundary half-degrees must be positive");
        sum += j;
        prefactor *= 2 * j * binomial(2 * j - 1, j);
    }
    ExactScalar c = ExactScalar(prefactor);
    c /= ExactScalar(sum);
    return series_derive(series_pow(R, sum), static_cast<int>(js.size()) - 2) * c;
}

Integer count_profile(IrreducibilityOrder order, const FaceProfile& profile) {
    const int b = order.b();
    const int m = profile.m();
    if (m < order.min_half_degree()) throw std::invalid_argument("root face degree must exceed d");
    const long E = profile.edges();

    long F = 0;
    long qb = 0;
    if (b == 0) {
        require_min_j(profile, 1, "count_profile(b=0)");
        // Vertices behave as faces of degree 0: q_0 = V and F = 2 + E.
        qb = profile.vertices();
        F = 2 + E;
    } else {
        require_min_j(profile, b, "count_profile");
        qb = profile.count(b);
        F = profile.faces();
    }
    if (F < 2 + qb) {
        throw ValidityError("formula valid only for F >= 2 + q_b (at least two faces of degree > d); got F = " +
                            std::to_string(F) + ", q_b = " + std::to_string(qb));
    }
    const long exponent = E + b * (F - 2 - 2 * qb);
    const int s = static_cast<int>(F - 2);
    const WeightedSeries r = solve_R(order, WeightSpace({}, 0), s);
    const ExactScalar coeff = series_pow(r, exponent).coefficient(s);

    ExactScalar value = ExactScalar(root_prefactor(m, b)) * face_product(profile, b, b);
    value /= ExactScalar(exponent);
    value *= ExactScalar(factorial(F - 2));
    value /= ExactScalar(factorial(qb));
    value *= coeff;
    return exact_integer(value, "count_profile");
}

Integer count_simple_bipartite(const FaceProfile& profile) {
    if (profile.count(1) != 0) throw std::invalid_argument("simple bipartite maps have no faces of degree 2");
    require_min_j(profile, 2, "count_simple_bipartite");
    const int m = profile.m();
    if (m < 2) throw std::invalid_argument("root face degree must be at least 4");
    const long F = profile.faces();
    if (F < 2) throw ValidityError("formula valid only for F >= 2; got F = " + std::to_string(F));
    const long E = profile.edges();
    ExactScalar value = ExactScalar(root_prefactor(m, 1)) * face_product(profile, 1, 1);
    value *= ExactScalar(factorial(E + F - 3));
    value /= ExactScalar(factorial(E));
    return exact_integer(value, "count_simple_bipartite");
}

Integer count_2m_angulations_simple(int m, long faces) {
    if (m < 2) throw std::invalid_argument("2m-angulations need m >= 2");
    if (faces < 2) throw ValidityError("formula valid only for F >= 2");
    Integer c;
    mpz_pow_ui(c.get_mpz_t(), binomial(2 * m - 1, m + 1).get_mpz_t(), static_cast<unsigned long>(faces));
    ExactScalar value = ExactScalar(2 * m * c * factorial((m + 1) * faces - 3));
    value /= ExactScalar(factorial(faces - 1) * factorial(m * faces));
    return exact_integer(value, "count_2m_angulations_simple");
}

Integer count_quadrangulations_simple(long faces) {
    if (faces < 1) throw std::invalid_argument("quadrangulations need F >= 1");
    ExactScalar value = ExactScalar(2 * factorial(3 * faces - 3));
    value /= ExactScalar(factorial(faces) * factorial(2 * faces - 1));
    return exact_integer(value, "count_quadrangulations_simple");
}

namespace {

struct FourIrreducibleShape {
    long E;
    long F;
    long q2;
};

FourIrreducibleShape check_4irreducible(const FaceProfile& profile) {
    require_min_j(profile, 2, "count_4irreducible");
    if (profile.m() < 3) throw std::invalid_argument("root face degree must exceed 4");
    const FourIrreducibleShape s{profile.edges(), profile.faces(), profile.count(2)};
    if (s.F < 2 + s.q2) {
        throw ValidityError("formula valid only for F >= 2 + q_2; got F = " + std::to_string(s.F) +
                            ", q_2 = " + std::to_string(s.q2));
    }
    return s;
}

}  // namespace

Integer count_4irreducible(const FaceProfile& profile) {
    const auto [E, F, q2] = check_4irreducible(profile);
    const long p = E + 2 * F - 4 - 4 * q2;
    ExactScalar value = ExactScalar(root_prefactor(profile.m(), 2)) * face_product(profile, 2, 2);
    value *= scaled_power_coefficient(p, F - 2);
    value /= ExactScalar(factorial(q2));
    return exact_integer(value, "count_4irreducible");
}

Integer count_4irreducible_hypergeometric(const FaceProfile& profile) {
    const auto [E, F, q2] = check_4irreducible(profile);
    ExactScalar bracket = F == 2 ? ExactScalar::fraction(1, E) : ExactScalar(0);
    if (F > 2) {
        ExactScalar t = ExactScalar(factorial(2 * (F - 3)));
        t /= ExactScalar(factorial(q2) * factorial(F - 3));
        bracket += t * hypergeometric_2f1_terminating(5 - E - 2 * F + 4 * q2, 3 - F, 2 * (3 - F), -1);
    }
    ExactScalar value = ExactScalar(root_prefactor(profile.m(), 2)) * face_product(profile, 2, 2) * bracket;
    return exact_integer(value, "count_4irreducible_hypergeometric");
}

Integer count_two_large_faces_4irr(int m, int m_prime, long q2) {
    if (m < 3 || m_prime < 3) throw std::invalid_argument("both large faces must have degree > 4");
    if (q2 < 0) throw std::invalid_argument("q2 must be nonnegative");
    ExactScalar bracket = q2 == 0 ? ExactScalar::fraction(1, m + m_prime) : ExactScalar(0);
    if (q2 > 0) {
        ExactScalar t = ExactScalar(factorial(2 * (q2 - 1)));
        t /= ExactScalar(factorial(q2) * factorial(q2 - 1));
        bracket += t * hypergeometric_2f1_terminating(1 - (m + m_prime), 1 - q2, 2 * (1 - q2), -1);
    }
    ExactScalar value =
        ExactScalar(root_prefactor(m, 2) * binomial(2 * m_prime - 1, m_prime + 2)) * bracket;
    return exact_integer(value, "count_two_large_faces_4irr");
}

Integer count_girth6(const FaceProfile& profile) {
    if (profile.count(2) != 0) throw std::invalid_argument("girth-6 maps have no faces of degree 4");
    require_min_j(profile, 3, "count_girth6");
    if (profile.m() < 3) throw std::invalid_argument("root face degree must be at least 6");
    const long E = profile.edges();
    const long F = profile.faces();
    if (F < 2) throw ValidityError("formula valid only for F >= 2");
    ExactScalar bracket = F == 2 ? ExactScalar::fraction(1, E) : ExactScalar(0);
    if (F > 2) {
        ExactScalar t = ExactScalar(factorial(2 * (F - 3)));
        t /= ExactScalar(factorial(F - 3));
        bracket += t * hypergeometric_2f1_terminating(5 - E - 2 * F, 3 - F, 2 * (3 - F), -1);
    }
    ExactScalar value = ExactScalar(root_prefactor(profile.m(), 2)) * face_product(profile, 2, 2) * bracket;
    return exact_integer(value, "count_girth6");
}

Integer count_hexangulations_girth6(long faces) {
    if (faces < 2) throw ValidityError("formula valid only for F >= 2");
    ExactScalar value = faces == 2 ? ExactScalar(1) : ExactScalar(0);
    if (faces > 2) {
        ExactScalar t = ExactScalar(6 * factorial(2 * (faces - 3)));
        t /= ExactScalar(factorial(faces - 1) * factorial(faces - 3));
        value += t * hypergeometric_2f1_terminating(5 * (1 - faces), 3 - faces, 2 * (3 - faces), -1);
    }
    return exact_integer(value, "count_hexangulations_girth6");
}

Integer count_bipartite_tutte(const FaceProfile& profile) {
    require_min_j(profile, 1, "count_bipartite_tutte");
    const long E = profile.edges();
    long V = profile.m() + 1;
    for (const auto& [j, c] : profile.q()) V += (j - 1) * c;
    ExactScalar value = ExactScalar(root_prefactor(profile.m(), 0)) * face_product(profile, 0, 0);
    value *= ExactScalar(factorial(E - 1));
    value /= ExactScalar(factorial(V));
    return exact_integer(value, "count_bipartite_tutte");
}

nlohmann::ordered_json to_json(const FormulaRecord& r) {
    nlohmann::ordered_json j;
    j["formula"] = r.formula;
    j["parameters"] = r.parameters;
    j["value"] = r.value.get_str();
    return j;
}

}  // namespace irredmap
