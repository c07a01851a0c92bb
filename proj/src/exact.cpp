#include "irredmap/exact.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace irredmap {

ExactScalar::ExactScalar(mpq_class v) : value_(std::move(v)) {
    value_.canonicalize();
}

ExactScalar ExactScalar::fraction(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("ExactScalar: zero denominator");
    mpq_class q(num, den);
    return ExactScalar(std::move(q));
}

ExactScalar ExactScalar::parse(std::string_view num, std::string_view den) {
    Integer n, d;
    if (n.set_str(std::string(num), 10) != 0 || d.set_str(std::string(den), 10) != 0) {
        throw std::invalid_argument("ExactScalar: malformed integer literal");
    }
    return fraction(n, d);
}

Integer ExactScalar::to_integer() const {
    if (!is_integer()) {
        throw std::domain_error("ExactScalar: " + to_string() + " is not an integer");
    }
    return value_.get_num();
}

std::string ExactScalar::to_string() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

ExactScalar& ExactScalar::operator/=(const ExactScalar& o) {
    if (o.is_zero()) throw std::domain_error("ExactScalar: division by zero");
    value_ /= o.value_;
    return *this;
}

Integer binomial(long n, long k) {
    if (k < 0) return 0;
    if (n >= 0 && k > n) return 0;
    Integer r;
    const Integer top(n);
    // mpz_bin_ui follows the falling-factorial convention for negative n.
    mpz_bin_ui(r.get_mpz_t(), top.get_mpz_t(), static_cast<unsigned long>(k));
    return r;
}

namespace {

struct FactorialTable {
    std::mutex mutex;
    std::vector<Integer> values{Integer(1)};
    std::size_t limit = 512;
};

FactorialTable& table() {
    static FactorialTable t;
    return t;
}

}  // namespace

void set_factorial_cache_limit(std::size_t limit) {
    auto& t = table();
    std::lock_guard lock(t.mutex);
    t.limit = std::max<std::size_t>(limit, 1);
    if (t.values.size() > t.limit) t.values.resize(t.limit);
}

std::size_t factorial_cache_limit() {
    auto& t = table();
    std::lock_guard lock(t.mutex);
    return t.limit;
}

Integer factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    auto& t = table();
    std::lock_guard lock(t.mutex);
    const auto un = static_cast<std::size_t>(n);
    if (un < t.limit) {
        while (t.values.size() <= un) {
            t.values.push_back(t.values.back() * static_cast<unsigned long>(t.values.size()));
        }
        return t.values[un];
    }
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Integer catalan(long l) {
    if (l < 0) throw std::invalid_argument("catalan: negative index");
    Integer c = binomial(2 * l, l);
    c /= (l + 1);
    return c;
}

ExactScalar scaled_power_coefficient(long p, long s) {
    if (p <= 0) throw std::invalid_argument("scaled_power_coefficient: p must be positive");
    if (s < 0) throw std::invalid_argument("scaled_power_coefficient: s must be nonnegative");
    if (s == 0) return ExactScalar::fraction(1, p);
    Integer sum = 0;
    const long top = std::min(p - 1, s - 1);
    for (long l = 0; l <= top; ++l) {
        sum += binomial(p - 1, l) * binomial(2 * (s - 1) - l, s - 1);
    }
    return ExactScalar(factorial(s - 1) * sum);
}

ExactScalar hypergeometric_2f1_terminating(long a, long b, long c, const ExactScalar& x) {
    long stop = -1;
    if (a <= 0) stop = -a;
    if (b <= 0) stop = stop < 0 ? -b : std::min(stop, -b);
    if (stop < 0) throw std::invalid_argument("2F1: series does not terminate");
    ExactScalar sum = 0;
    ExactScalar term = 1;
    for (long k = 0; k <= stop; ++k) {
        sum += term;
        if (k == stop) break;
        if (c + k == 0) throw std::invalid_argument("2F1: lower parameter hits zero");
        term *= ExactScalar((a + k) * (b + k));
        term /= ExactScalar((c + k) * (k + 1));
        term *= x;
    }
    return sum;
}

}  // namespace irredmap
