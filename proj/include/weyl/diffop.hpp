#pragma once

#include "weyl/monomial.hpp"
#include "weyl/polynomial.hpp"

namespace weyl {

enum class Filtration { order, bernstein };

/// Element of the Weyl algebra A_n in normal form: a finite sum of
/// c * x^a d^b with every x-factor to the left of every d-factor. The
/// representation is canonical, so structural equality is ring equality.
class DiffOp {
public:
    using Terms = TermMap<ExponentPair>;

    explicit DiffOp(std::size_t n) : n_(n) {}
    DiffOp(std::size_t n, Terms terms);

    static DiffOp constant(std::size_t n, const Coefficient& c);
    static DiffOp monomial(ExponentPair e, const Coefficient& c);
    /// Multiplication by x_{i+1}.
    static DiffOp x(std::size_t n, std::size_t i);
    /// The derivation d_{i+1} = d/dx_{i+1}.
    static DiffOp d(std::size_t n, std::size_t i);
    /// Multiplication by a polynomial.
    static DiffOp from_polynomial(const Polynomial& f);

    std::size_t vars() const { return n_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Coefficient coefficient(const ExponentPair& e) const;

    friend bool operator==(const DiffOp&, const DiffOp&) = default;

private:
    std::size_t n_;
    Terms terms_;
};

/// Element of gr D = k[x_1..x_n, xi_1..xi_n] (commutative).
class SymbolPoly {
public:
    using Terms = TermMap<ExponentPair>;

    explicit SymbolPoly(std::size_t n) : n_(n) {}
    SymbolPoly(std::size_t n, Terms terms);

    std::size_t vars() const { return n_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    friend bool operator==(const SymbolPoly&, const SymbolPoly&) = default;

private:
    std::size_t n_;
    Terms terms_;
};

DiffOp add(const DiffOp& p, const DiffOp& q);
DiffOp sub(const DiffOp& p, const DiffOp& q);
DiffOp scale(const DiffOp& p, const Coefficient& c);
DiffOp mul(const DiffOp& p, const DiffOp& q);
DiffOp pow(const DiffOp& p, std::uint32_t k);
DiffOp commutator(const DiffOp& p, const DiffOp& q);

/// Product of two normal-form monomials, d^b x^c expanded by the Leibniz rule:
/// d_i^b x_i^c = sum_k C(b,k) c!/(c-k)! x_i^{c-k} d_i^{b-k}.
DiffOp mul_monomials(const ExponentPair& lhs, const ExponentPair& rhs);

/// Action on polynomials: x_i multiplies, d_i differentiates.
Polynomial apply(const DiffOp& p, const Polynomial& f, Truncation trunc = std::nullopt);

/// Total d-degree; -inf for zero.
Degree order_degree(const DiffOp& p);
/// Total degree |a|+|b|; -inf for zero.
Degree bernstein_degree(const DiffOp& p);
Degree filtration_degree(const DiffOp& p, Filtration f);

/// Top-degree part under the filtration with d_i replaced by xi_i.
/// Throws UndefinedSymbol for the zero operator.
SymbolPoly principal_symbol(const DiffOp& p, Filtration f);

SymbolPoly mul(const SymbolPoly& p, const SymbolPoly& q);

inline DiffOp operator+(const DiffOp& p, const DiffOp& q) { return add(p, q); }
inline DiffOp operator-(const DiffOp& p, const DiffOp& q) { return sub(p, q); }
inline DiffOp operator-(const DiffOp& p) { return scale(p, -1); }
inline DiffOp operator*(const DiffOp& p, const DiffOp& q) { return mul(p, q); }

} // namespace weyl
