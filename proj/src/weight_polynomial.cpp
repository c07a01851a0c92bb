#include "irredmap/weight_polynomial.hpp"

#include <numeric>
#include <stdexcept>

namespace irredmap {

int total_degree(const Monomial& m) {
    return static_cast<int>(std::accumulate(m.begin(), m.end(), std::uint64_t{0}));
}

WeightPolynomial::WeightPolynomial(std::size_t arity, const ExactScalar& constant) : arity_(arity) {
    if (!constant.is_zero()) terms_.emplace(Monomial(arity, 0), constant);
}

WeightPolynomial WeightPolynomial::variable(std::size_t arity, std::size_t position) {
    if (position >= arity) throw std::out_of_range("WeightPolynomial: variable position out of range");
    WeightPolynomial p(arity);
    Monomial m(arity, 0);
    m[position] = 1;
    p.terms_.emplace(std::move(m), ExactScalar(1));
    return p;
}

ExactScalar WeightPolynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? ExactScalar(0) : it->second;
}

ExactScalar WeightPolynomial::constant_term() const {
    return coefficient(Monomial(arity_, 0));
}

void WeightPolynomial::add_term(const Monomial& m, const ExactScalar& c) {
    if (m.size() != arity_) throw std::invalid_argument("WeightPolynomial: monomial arity mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

int WeightPolynomial::degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, total_degree(m));
    return d;
}

WeightPolynomial WeightPolynomial::truncated(int max_degree) const {
    WeightPolynomial r(arity_);
    for (const auto& [m, c] : terms_) {
        if (total_degree(m) <= max_degree) r.terms_.emplace_hint(r.terms_.end(), m, c);
    }
    return r;
}

void WeightPolynomial::check_arity(const WeightPolynomial& o) const {
    if (arity_ != o.arity_) throw std::invalid_argument("WeightPolynomial: arity mismatch");
}

WeightPolynomial& WeightPolynomial::operator+=(const WeightPolynomial& o) {
    check_arity(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

WeightPolynomial& WeightPolynomial::operator-=(const WeightPolynomial& o) {
    check_arity(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

WeightPolynomial& WeightPolynomial::operator*=(const ExactScalar& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

WeightPolynomial WeightPolynomial::operator-() const {
    WeightPolynomial r(*this);
    for (auto& [m, v] : r.terms_) v = -v;
    return r;
}

WeightPolynomial WeightPolynomial::multiply(const WeightPolynomial& a, const WeightPolynomial& b,
                                            int max_degree) {
    a.check_arity(b);
    WeightPolynomial r(a.arity_);
    if (a.is_zero() || b.is_zero()) return r;
    Monomial m(a.arity_);
    for (const auto& [ma, ca] : a.terms_) {
        const int da = total_degree(ma);
        if (da > max_degree) continue;
        for (const auto& [mb, cb] : b.terms_) {
            if (da + total_degree(mb) > max_degree) continue;
            for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

WeightPolynomial WeightPolynomial::derivative(std::size_t position) const {
    if (position >= arity_) throw std::out_of_range("WeightPolynomial: variable position out of range");
    WeightPolynomial r(arity_);
    for (const auto& [m, c] : terms_) {
        if (m[position] == 0) continue;
        Monomial d = m;
        d[position] -= 1;
        r.add_term(d, c * ExactScalar(static_cast<long>(m[position])));
    }
    return r;
}

WeightPolynomial WeightPolynomial::inverse(int max_degree) const {
    const ExactScalar c0 = constant_term();
    if (c0.is_zero()) throw std::domain_error("WeightPolynomial: constant term is not invertible");
    const ExactScalar inv0 = ExactScalar(1) / c0;
    // p = c0 (1 + q) with q free of constants; 1/(1+q) = sum (-q)^k, k <= max_degree.
    WeightPolynomial minus_q = (*this) * (-inv0);
    minus_q.add_term(Monomial(arity_, 0), 1);
    WeightPolynomial sum(arity_, 1);
    WeightPolynomial power(arity_, 1);
    for (int k = 1; k <= max_degree; ++k) {
        power = multiply(power, minus_q, max_degree);
        if (power.is_zero()) break;
        sum += power;
    }
    return sum * inv0;
}

}  // namespace irredmap
