#include "weyl/monomial.hpp"

#include "weyl/errors.hpp"

#include <numeric>

namespace weyl {

std::uint64_t total_degree(const Exponents& e) {
    return std::accumulate(e.begin(), e.end(), std::uint64_t{0});
}

int degrevlex_compare(const Exponents& lhs, const Exponents& rhs) {
    const auto dl = total_degree(lhs);
    const auto dr = total_degree(rhs);
    if (dl != dr) return dl > dr ? 1 : -1;
    for (std::size_t i = lhs.size(); i-- > 0;) {
        if (lhs[i] != rhs[i]) return lhs[i] < rhs[i] ? 1 : -1;
    }
    return 0;
}

int degrevlex_compare(const ExponentPair& lhs, const ExponentPair& rhs) {
    const auto dl = lhs.degree();
    const auto dr = rhs.degree();
    if (dl != dr) return dl > dr ? 1 : -1;
    for (std::size_t i = lhs.b.size(); i-- > 0;) {
        if (lhs.b[i] != rhs.b[i]) return lhs.b[i] < rhs.b[i] ? 1 : -1;
    }
    for (std::size_t i = lhs.a.size(); i-- > 0;) {
        if (lhs.a[i] != rhs.a[i]) return lhs.a[i] < rhs.a[i] ? 1 : -1;
    }
    return 0;
}

std::int64_t Degree::value() const {
    if (!finite_) throw Error("value() of the -inf degree");
    return value_;
}

std::string Degree::to_string() const { return finite_ ? std::to_string(value_) : "-inf"; }

std::string to_string(const Coefficient& c) { return c.get_str(); }

mpz_class falling_factorial(std::uint64_t c, std::uint64_t k) {
    mpz_class r = 1;
    for (std::uint64_t j = 0; j < k; ++j) r *= static_cast<unsigned long>(c - j);
    return r;
}

mpz_class binomial(std::uint64_t n, std::uint64_t k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

} // namespace weyl
