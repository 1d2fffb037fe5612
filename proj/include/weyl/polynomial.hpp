#pragma once

#include "weyl/monomial.hpp"

#include <optional>

namespace weyl {

/// Optional x-degree bound N. When set, products and operator actions drop every
/// term of total x-degree above N, emulating power series modulo m^{N+1}.
using Truncation = std::optional<std::uint32_t>;

/// Commutative polynomial in x_1..x_n over the rationals.
class Polynomial {
public:
    using Terms = TermMap<Exponents>;

    explicit Polynomial(std::size_t n) : n_(n) {}
    Polynomial(std::size_t n, Terms terms);

    static Polynomial constant(std::size_t n, const Coefficient& c);
    /// The variable x_{i+1} (0-based index).
    static Polynomial variable(std::size_t n, std::size_t i);
    static Polynomial monomial(Exponents e, const Coefficient& c);

    std::size_t vars() const { return n_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Degree degree() const;
    Coefficient coefficient(const Exponents& e) const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    std::size_t n_;
    Terms terms_;
};

Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial sub(const Polynomial& p, const Polynomial& q);
Polynomial scale(const Polynomial& p, const Coefficient& c);
Polynomial mul(const Polynomial& p, const Polynomial& q, Truncation trunc = std::nullopt);
Polynomial pow(const Polynomial& p, std::uint32_t k, Truncation trunc = std::nullopt);
/// Partial derivative with respect to x_{i+1}.
Polynomial derivative(const Polynomial& p, std::size_t i);
Polynomial truncate(const Polynomial& p, Truncation trunc);

inline Polynomial operator+(const Polynomial& p, const Polynomial& q) { return add(p, q); }
inline Polynomial operator-(const Polynomial& p, const Polynomial& q) { return sub(p, q); }
inline Polynomial operator*(const Polynomial& p, const Polynomial& q) { return mul(p, q); }

} // namespace weyl
