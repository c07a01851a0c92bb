#include "irredmap/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace irredmap {

WeightSpace::WeightSpace(std::vector<int> js, int max_deg) : half_degrees(std::move(js)), max_degree(max_deg) {
    std::sort(half_degrees.begin(), half_degrees.end());
    half_degrees.erase(std::unique(half_degrees.begin(), half_degrees.end()), half_degrees.end());
    if (max_degree < 0) throw std::invalid_argument("WeightSpace: negative weight-degree bound");
}

std::size_t WeightSpace::position(int j) const {
    auto it = std::lower_bound(half_degrees.begin(), half_degrees.end(), j);
    if (it == half_degrees.end() || *it != j) {
        throw std::invalid_argument("weight x_" + std::to_string(2 * j) + " is not active");
    }
    return static_cast<std::size_t>(it - half_degrees.begin());
}

bool WeightSpace::contains(int j) const {
    return std::binary_search(half_degrees.begin(), half_degrees.end(), j);
}

WeightSpace WeightSpace::with_indices(const std::vector<int>& extra) const {
    std::vector<int> all = half_degrees;
    all.insert(all.end(), extra.begin(), extra.end());
    return WeightSpace(std::move(all), max_degree);
}

std::string SeriesMismatch::describe(const WeightSpace& space) const {
    std::ostringstream os;
    os << "[z^" << z_power;
    for (std::size_t i = 0; i < monomial.size(); ++i) {
        if (monomial[i] != 0) os << " x" << 2 * space.half_degrees[i] << "^" << monomial[i];
    }
    os << "] " << lhs << " != " << rhs;
    return os.str();
}

WeightedSeries::WeightedSeries(WeightSpace space, int order)
    : space_(std::move(space)), order_(order) {
    if (order < 0) throw std::invalid_argument("WeightedSeries: negative order");
    coeffs_.assign(static_cast<std::size_t>(order) + 1, WeightPolynomial(space_.arity()));
}

WeightedSeries WeightedSeries::constant(WeightSpace space, int order, const ExactScalar& c) {
    WeightedSeries s(std::move(space), order);
    s.coeffs_[0] = WeightPolynomial(s.space_.arity(), c);
    return s;
}

WeightedSeries WeightedSeries::z(WeightSpace space, int order) {
    WeightedSeries s(std::move(space), order);
    if (order >= 1) s.coeffs_[1] = WeightPolynomial(s.space_.arity(), 1);
    return s;
}

WeightedSeries WeightedSeries::weight(WeightSpace space, int order, int j) {
    WeightedSeries s(std::move(space), order);
    if (s.space_.max_degree >= 1) {
        s.coeffs_[0] = WeightPolynomial::variable(s.space_.arity(), s.space_.position(j));
    } else {
        (void)s.space_.position(j);
    }
    return s;
}

WeightedSeries WeightedSeries::from_scalars(WeightSpace space, const std::vector<ExactScalar>& c) {
    if (c.empty()) throw std::invalid_argument("WeightedSeries: empty coefficient list");
    WeightedSeries s(std::move(space), static_cast<int>(c.size()) - 1);
    for (std::size_t n = 0; n < c.size(); ++n) s.coeffs_[n] = WeightPolynomial(s.space_.arity(), c[n]);
    return s;
}

ExactScalar WeightedSeries::coefficient(int n, const Monomial& m) const {
    if (n < 0 || n > order_) throw std::out_of_range("WeightedSeries: z power beyond truncation order");
    return coeffs_[static_cast<std::size_t>(n)].coefficient(m);
}

ExactScalar WeightedSeries::coefficient(int n) const {
    return coefficient(n, Monomial(space_.arity(), 0));
}

void WeightedSeries::set(int n, WeightPolynomial p) {
    if (n < 0 || n > order_) throw std::out_of_range("WeightedSeries: z power beyond truncation order");
    if (p.arity() != space_.arity()) throw std::invalid_argument("WeightedSeries: arity mismatch");
    coeffs_[static_cast<std::size_t>(n)] = p.truncated(space_.max_degree);
}

bool WeightedSeries::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const auto& p) { return p.is_zero(); });
}

WeightedSeries WeightedSeries::truncated(int order, int max_degree) const {
    if (order > order_ || max_degree > space_.max_degree) {
        throw std::invalid_argument("WeightedSeries: cannot extend truncation bounds");
    }
    WeightedSeries r(space_.with_max_degree(max_degree), order);
    for (int n = 0; n <= order; ++n) r.coeffs_[static_cast<std::size_t>(n)] = coeffs_[static_cast<std::size_t>(n)].truncated(max_degree);
    return r;
}

namespace {

void check_compatible(const WeightedSeries& a, const WeightedSeries& b) {
    if (a.space().half_degrees != b.space().half_degrees) {
        throw std::invalid_argument("series: mismatched weight-index sets");
    }
}

std::pair<int, int> common_bounds(const WeightedSeries& a, const WeightedSeries& b) {
    check_compatible(a, b);
    return {std::min(a.order(), b.order()), std::min(a.weight_bound(), b.weight_bound())};
}

}  // namespace

WeightedSeries& WeightedSeries::operator+=(const WeightedSeries& o) {
    auto [n, m] = common_bounds(*this, o);
    if (n != order_ || m != space_.max_degree) *this = truncated(n, m);
    for (int i = 0; i <= n; ++i) {
        coeffs_[static_cast<std::size_t>(i)] += o.coeffs_[static_cast<std::size_t>(i)].truncated(m);
    }
    return *this;
}

WeightedSeries& WeightedSeries::operator-=(const WeightedSeries& o) {
    return *this += -o;
}

WeightedSeries& WeightedSeries::operator*=(const ExactScalar& c) {
    for (auto& p : coeffs_) p *= c;
    return *this;
}

WeightedSeries WeightedSeries::operator-() const {
    WeightedSeries r(*this);
    for (auto& p : r.coeffs_) p = -p;
    return r;
}

WeightedSeries operator*(const WeightedSeries& a, const WeightedSeries& b) {
    auto [n, m] = common_bounds(a, b);
    WeightedSeries r(a.space().with_max_degree(m), n);
    for (int i = 0; i <= n; ++i) {
        const auto& ai = a.coeffs_[static_cast<std::size_t>(i)];
        if (ai.is_zero()) continue;
        for (int k = 0; i + k <= n; ++k) {
            const auto& bk = b.coeffs_[static_cast<std::size_t>(k)];
            if (bk.is_zero()) continue;
            r.coeffs_[static_cast<std::size_t>(i + k)] += WeightPolynomial::multiply(ai, bk, m);
        }
    }
    return r;
}

bool operator==(const WeightedSeries& a, const WeightedSeries& b) {
    return a.space_ == b.space_ && a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
}

WeightedSeries series_add(const WeightedSeries& a, const WeightedSeries& b) { return a + b; }
WeightedSeries series_mul(const WeightedSeries& a, const WeightedSeries& b) { return a * b; }

WeightedSeries series_pow(const WeightedSeries& s, long k) {
    if (k < 0) throw std::invalid_argument("series_pow: negative exponent");
    WeightedSeries result = WeightedSeries::constant(s.space(), s.order(), 1);
    WeightedSeries base = s;
    while (k > 0) {
        if (k & 1) result = result * base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return result;
}

WeightedSeries series_derive(const WeightedSeries& s) {
    if (s.order() < 1) throw std::invalid_argument("series_derive: order-0 series has no derivative");
    WeightedSeries r(s.space(), s.order() - 1);
    for (int n = 1; n <= s.order(); ++n) r.set(n - 1, s[n] * ExactScalar(n));
    return r;
}

WeightedSeries series_derive(const WeightedSeries& s, int k) {
    if (k < 0) throw std::invalid_argument("series_derive: negative derivative count");
    WeightedSeries r = s;
    for (int i = 0; i < k; ++i) r = series_derive(r);
    return r;
}

WeightedSeries weight_derive(const WeightedSeries& s, int j) {
    const std::size_t pos = s.space().position(j);
    if (s.weight_bound() < 1) {
        throw std::invalid_argument("weight_derive: weight-degree bound exhausted");
    }
    WeightedSeries r(s.space().with_max_degree(s.weight_bound() - 1), s.order());
    for (int n = 0; n <= s.order(); ++n) r.set(n, s[n].derivative(pos));
    return r;
}

WeightedSeries series_inverse(const WeightedSeries& s) {
    const int m = s.weight_bound();
    const WeightPolynomial inv0 = s[0].inverse(m);
    WeightedSeries r(s.space(), s.order());
    r.set(0, inv0);
    for (int n = 1; n <= s.order(); ++n) {
        WeightPolynomial acc(s.space().arity());
        for (int k = 1; k <= n; ++k) acc += WeightPolynomial::multiply(s[k], r[n - k], m);
        r.set(n, -WeightPolynomial::multiply(inv0, acc, m));
    }
    return r;
}

std::optional<SeriesMismatch> compare_series(const WeightedSeries& a, const WeightedSeries& b) {
    auto [n, m] = common_bounds(a, b);
    for (int i = 0; i <= n; ++i) {
        const auto pa = a[i].truncated(m);
        const auto pb = b[i].truncated(m);
        if (pa == pb) continue;
        // Walk both term maps in monomial order to find the first difference.
        auto ia = pa.terms().begin();
        auto ib = pb.terms().begin();
        while (true) {
            if (ia != pa.terms().end() && ib != pb.terms().end() && ia->first == ib->first) {
                if (!(ia->second == ib->second)) return SeriesMismatch{i, ia->first, ia->second, ib->second};
                ++ia;
                ++ib;
            } else if (ib == pb.terms().end() || (ia != pa.terms().end() && ia->first < ib->first)) {
                return SeriesMismatch{i, ia->first, ia->second, ExactScalar(0)};
            } else {
                return SeriesMismatch{i, ib->first, ExactScalar(0), ib->second};
            }
        }
    }
    return std::nullopt;
}

nlohmann::ordered_json series_to_json(const WeightedSeries& s) {
    nlohmann::ordered_json out;
    out["order"] = s.order();
    auto coeffs = nlohmann::ordered_json::array();
    for (int n = 0; n <= s.order(); ++n) {
        auto terms = nlohmann::ordered_json::array();
        for (const auto& [mon, c] : s[n].terms()) {
            nlohmann::ordered_json m = nlohmann::ordered_json::object();
            for (std::size_t i = 0; i < mon.size(); ++i) {
                if (mon[i] != 0) m[std::to_string(2 * s.space().half_degrees[i])] = mon[i];
            }
            nlohmann::ordered_json t;
            t["monomial"] = std::move(m);
            t["num"] = c.numerator().get_str();
            t["den"] = c.denominator().get_str();
            terms.push_back(std::move(t));
        }
        coeffs.push_back(std::move(terms));
    }
    out["coeffs"] = std::move(coeffs);
    return out;
}

WeightedSeries series_from_json(const nlohmann::ordered_json& j, const WeightSpace& space) {
    const int order = j.at("order").get<int>();
    const auto& coeffs = j.at("coeffs");
    if (!coeffs.is_array() || coeffs.size() != static_cast<std::size_t>(order) + 1) {
        throw std::invalid_argument("series JSON: coeffs length must equal order+1");
    }
    WeightedSeries s(space, order);
    for (int n = 0; n <= order; ++n) {
        WeightPolynomial p(space.arity());
        for (const auto& t : coeffs[static_cast<std::size_t>(n)]) {
            Monomial mon(space.arity(), 0);
            for (const auto& [key, e] : t.at("monomial").items()) {
                const int degree = std::stoi(key);
                if (degree % 2 != 0) throw std::invalid_argument("series JSON: odd face degree key");
                mon[space.position(degree / 2)] = e.get<std::uint32_t>();
            }
            p.add_term(mon, ExactScalar::parse(t.at("num").get<std::string>(), t.at("den").get<std::string>()));
        }
        s.set(n, std::move(p));
    }
    return s;
}

std::string series_to_string(const WeightedSeries& s) {
    std::ostringstream os;
    bool first = true;
    for (int n = 0; n <= s.order(); ++n) {
        for (const auto& [mon, c] : s[n].terms()) {
            std::ostringstream factor;
            bool has_factor = false;
            for (std::size_t i = 0; i < mon.size(); ++i) {
                if (mon[i] == 0) continue;
                factor << (has_factor ? "*" : "") << "x" << 2 * s.space().half_degrees[i];
                if (mon[i] > 1) factor << "^" << mon[i];
                has_factor = true;
            }
            if (n > 0) {
                factor << (has_factor ? "*" : "") << "z";
                if (n > 1) factor << "^" << n;
                has_factor = true;
            }
            ExactScalar coef = c;
            if (!first) {
                os << (coef.sign() < 0 ? " - " : " + ");
                if (coef.sign() < 0) coef = -coef;
            }
            if (!has_factor) {
                os << coef;
            } else if (coef == ExactScalar(1)) {
                os << factor.str();
            } else if (coef == ExactScalar(-1)) {
                os << "-" << factor.str();
            } else {
                os << coef << "*" << factor.str();
            }
            first = false;
        }
    }
    if (first) os << "0";
    os << " + O(z^" << s.order() + 1 << ")";
    return os.str();
}

}  // namespace irredmap
