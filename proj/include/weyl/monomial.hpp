#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace weyl {

/// Exact rational coefficient. GMP keeps every fraction in lowest terms with a
/// positive denominator.
using Coefficient = mpq_class;

using Exponents = std::vector<std::uint32_t>;

std::uint64_t total_degree(const Exponents& e);

/// Exponents of x_1^{a_1}..x_n^{a_n} d_1^{b_1}..d_n^{b_n}.
struct ExponentPair {
    Exponents a;
    Exponents b;

    ExponentPair() = default;
    explicit ExponentPair(std::size_t n) : a(n, 0), b(n, 0) {}
    ExponentPair(Exponents xa, Exponents db) : a(std::move(xa)), b(std::move(db)) {}

    std::size_t vars() const { return a.size(); }
    std::uint64_t x_degree() const { return total_degree(a); }
    std::uint64_t d_degree() const { return total_degree(b); }
    std::uint64_t degree() const { return x_degree() + d_degree(); }
    bool is_one() const { return degree() == 0; }

    friend bool operator==(const ExponentPair&, const ExponentPair&) = default;
};

/// Degree-reverse-lexicographic comparison. Returns >0 when lhs is the larger
/// monomial. ExponentPairs compare on the concatenated vector (a, b).
int degrevlex_compare(const Exponents& lhs, const Exponents& rhs);
int degrevlex_compare(const ExponentPair& lhs, const ExponentPair& rhs);

/// Map comparator placing the degrevlex-largest term first.
struct DegRevLexGreater {
    bool operator()(const Exponents& l, const Exponents& r) const { return degrevlex_compare(l, r) > 0; }
    bool operator()(const ExponentPair& l, const ExponentPair& r) const {
        return degrevlex_compare(l, r) > 0;
    }
};

template <class Key>
using TermMap = std::map<Key, Coefficient, DegRevLexGreater>;

/// Adds c to the coefficient at key, erasing it when the sum vanishes.
template <class Key>
void accumulate(TermMap<Key>& terms, const Key& key, const Coefficient& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms.erase(it);
    }
}

/// Degree that may be minus infinity (the degree of zero).
class Degree {
public:
    static constexpr Degree neg_inf() { return Degree(); }
    constexpr explicit Degree(std::int64_t v) : value_(v), finite_(true) {}

    constexpr bool is_neg_inf() const { return !finite_; }
    std::int64_t value() const;

    friend constexpr bool operator==(const Degree&, const Degree&) = default;
    friend constexpr std::strong_ordering operator<=>(const Degree& l, const Degree& r) {
        if (l.finite_ != r.finite_) return l.finite_ ? std::strong_ordering::greater : std::strong_ordering::less;
        return l.value_ <=> r.value_;
    }
    friend constexpr Degree operator+(const Degree& l, const Degree& r) {
        if (!l.finite_ || !r.finite_) return neg_inf();
        return Degree(l.value_ + r.value_);
    }

    std::string to_string() const;

private:
    constexpr Degree() = default;
    std::int64_t value_ = 0;
    bool finite_ = false;
};

std::string to_string(const Coefficient& c);

/// Falling factorial c (c-1) ... (c-k+1).
mpz_class falling_factorial(std::uint64_t c, std::uint64_t k);
mpz_class binomial(std::uint64_t n, std::uint64_t k);

} // namespace weyl
