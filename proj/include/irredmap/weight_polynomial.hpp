#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "irredmap/exact.hpp"

namespace irredmap {

/// Exponent vector over a fixed, ordered list of active weight indices.
using Monomial = std::vector<std::uint32_t>;

int total_degree(const Monomial& m);

/// Sparse polynomial with exact coefficients in a fixed number of weight
/// indeterminates x_{2j}. Variables are addressed by position in the
/// owning series' active index list; the polynomial itself only knows how
/// many there are. Zero coefficients are never stored.
class WeightPolynomial {
public:
    using Terms = std::map<Monomial, ExactScalar>;

    explicit WeightPolynomial(std::size_t arity = 0) : arity_(arity) {}
    WeightPolynomial(std::size_t arity, const ExactScalar& constant);

    static WeightPolynomial variable(std::size_t arity, std::size_t position);

    std::size_t arity() const { return arity_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    ExactScalar coefficient(const Monomial& m) const;
    ExactScalar constant_term() const;

    /// Adds c * m; drops the entry if it cancels.
    void add_term(const Monomial& m, const ExactScalar& c);

    /// Largest total degree among stored monomials, -1 for the zero polynomial.
    int degree() const;

    WeightPolynomial truncated(int max_degree) const;

    WeightPolynomial& operator+=(const WeightPolynomial& o);
    WeightPolynomial& operator-=(const WeightPolynomial& o);
    WeightPolynomial& operator*=(const ExactScalar& c);
    WeightPolynomial operator-() const;

    /// Product with every monomial of total degree > max_degree discarded.
    static WeightPolynomial multiply(const WeightPolynomial& a, const WeightPolynomial& b, int max_degree);

    /// Partial derivative with respect to the variable at `position`.
    WeightPolynomial derivative(std::size_t position) const;

    /// Inverse modulo total degree > max_degree; the constant term must be nonzero.
    WeightPolynomial inverse(int max_degree) const;

    friend bool operator==(const WeightPolynomial& a, const WeightPolynomial& b) {
        return a.arity_ == b.arity_ && a.terms_ == b.terms_;
    }

private:
    void check_arity(const WeightPolynomial& o) const;

    std::size_t arity_;
    Terms terms_;
};

inline WeightPolynomial operator+(WeightPolynomial a, const WeightPolynomial& b) { return a += b; }
inline WeightPolynomial operator-(WeightPolynomial a, const WeightPolynomial& b) { return a -= b; }
inline WeightPolynomial operator*(WeightPolynomial a, const ExactScalar& c) { return a *= c; }

}  // namespace irredmap
