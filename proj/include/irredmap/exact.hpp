#pragma once

// Exact integer/rational arithmetic and the closed-form combinatorial
// quantities (binomials, Catalan numbers, terminating hypergeometric sums)
// shared by every counting formula in the library.

#include <compare>
#include <concepts>
#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace irredmap {

using Integer = mpz_class;

/// Exact rational number kept in canonical form (positive denominator,
/// numerator and denominator coprime). Immutable in spirit: every operation
/// returns a fresh canonical value.
class ExactScalar {
public:
    ExactScalar() = default;

    template <std::integral T>
    ExactScalar(T v) : value_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)

    ExactScalar(const Integer& v) : value_(v) {}  // NOLINT(google-explicit-constructor)

    // gmpxx integer expression templates, e.g. 2 * binomial(n, k).
    template <class Op>
    ExactScalar(const __gmp_expr<mpz_t, Op>& e) : value_(Integer(e)) {}  // NOLINT(google-explicit-constructor)

    explicit ExactScalar(mpq_class v);

    /// Builds num/den; throws std::domain_error when den == 0.
    static ExactScalar fraction(const Integer& num, const Integer& den);

    /// Parses decimal numerator/denominator strings, e.g. ("-3", "4").
    static ExactScalar parse(std::string_view num, std::string_view den = "1");

    const mpq_class& value() const { return value_; }
    Integer numerator() const { return value_.get_num(); }
    Integer denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    /// Returns the value as an integer; throws std::domain_error otherwise.
    Integer to_integer() const;

    /// "p" for integers, "p/q" otherwise.
    std::string to_string() const;

    ExactScalar& operator+=(const ExactScalar& o) { value_ += o.value_; return *this; }
    ExactScalar& operator-=(const ExactScalar& o) { value_ -= o.value_; return *this; }
    ExactScalar& operator*=(const ExactScalar& o) { value_ *= o.value_; return *this; }
    ExactScalar& operator/=(const ExactScalar& o);

    friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
    friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
    friend ExactScalar operator*(ExactScalar a, const ExactScalar& b) { return a *= b; }
    friend ExactScalar operator/(ExactScalar a, const ExactScalar& b) { return a /= b; }
    ExactScalar operator-() const { return ExactScalar(mpq_class(-value_)); }

    friend bool operator==(const ExactScalar& a, const ExactScalar& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const ExactScalar& a, const ExactScalar& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const ExactScalar& s) {
        return os << s.to_string();
    }

private:
    mpq_class value_{0};
};

/// Binomial coefficient for arbitrary integers. Zero when k < 0 or when
/// n >= 0 and k > n; for n < 0 uses n(n-1)...(n-k+1)/k!.
Integer binomial(long n, long k);

/// n!, served from a memo table for n below the configured cache limit.
Integer factorial(long n);

/// Upper bound (exclusive) on the memoized factorial table. Default 512.
void set_factorial_cache_limit(std::size_t limit);
std::size_t factorial_cache_limit();

/// Catalan number binomial(2l, l)/(l+1); throws std::invalid_argument for l < 0.
Integer catalan(long l);

/// (s!/p) [z^s] (r4)^p with r4 = 1 + (1 - sqrt(1-4z))/2, evaluated through
/// the closed binomial sum
///   delta_{s,0}/p + (s-1)! sum_{l=0}^{min(p-1,s-1)} C(p-1,l) C(2(s-1)-l, s-1),
/// the second term being zero when s = 0. Requires p >= 1 and s >= 0.
ExactScalar scaled_power_coefficient(long p, long s);

/// Gauss hypergeometric 2F1(a, b; c; x) for integer parameters where a or b
/// is a nonpositive integer, i.e. a finite sum. Throws std::invalid_argument
/// if the series does not terminate or if (c)_k vanishes before it does.
ExactScalar hypergeometric_2f1_terminating(long a, long b, long c, const ExactScalar& x);

}  // namespace irredmap
