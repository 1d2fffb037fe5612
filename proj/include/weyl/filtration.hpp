#pragma once

#include "weyl/diffop.hpp"
#include "weyl/linalg.hpp"

#include <optional>
#include <unordered_map>
#include <vector>

namespace weyl {

/// Generators g_1..g_m of the left ideal I = D g_1 + ... + D g_m, presenting
/// the cyclic module M = D/I with generator z = class of 1. No generators
/// means I = 0.
class LeftIdealPresentation {
public:
    LeftIdealPresentation(std::size_t n, std::vector<DiffOp> generators);

    std::size_t vars() const { return n_; }
    const std::vector<DiffOp>& generators() const { return generators_; }
    /// Largest Bernstein degree among generators; 0 for the zero ideal.
    std::uint32_t max_generator_degree() const;

    friend bool operator==(const LeftIdealPresentation&, const LeftIdealPresentation&) = default;

private:
    std::size_t n_;
    std::vector<DiffOp> generators_;
};

/// Gamma_t = sum_i B_{t - k_i} u_i in M, with B the Bernstein filtration.
struct GoodFiltrationSpec {
    LeftIdealPresentation ideal;
    std::vector<DiffOp> generators;
    std::vector<std::uint32_t> shifts;

    /// The filtration B_t z generated by the class of 1.
    static GoodFiltrationSpec standard(LeftIdealPresentation ideal);
    void validate() const;
};

/// Controls the finite approximation of I ∩ B_t: products m g_j are taken up
/// to Bernstein degree s = t + max generator degree + slack.
struct TruncationParams {
    /// Defaults to max generator degree + 2.
    std::optional<std::uint32_t> slack;
    std::uint32_t stabilization_window = 2;

    std::uint32_t slack_for(const LeftIdealPresentation& ideal) const {
        return slack.value_or(ideal.max_generator_degree() + 2);
    }
};

/// All exponent pairs of filtration degree <= t, ordered by increasing degree
/// and degrevlex-descending within a degree. The order filtration needs a finite
/// x-degree truncation, otherwise UnboundedBasis is thrown.
std::vector<ExponentPair> monomial_basis(std::size_t n, std::uint32_t t, Filtration f,
                                         Truncation trunc = std::nullopt);

/// Number of monomials of Bernstein degree <= t in A_n, C(t + 2n, 2n).
std::size_t bernstein_basis_size(std::size_t n, std::uint32_t t);

/// Column numbering for monomials: degree-descending, degrevlex-descending
/// within a degree, so eliminating left-to-right removes high-degree
/// coordinates first.
class MonomialIndex {
public:
    explicit MonomialIndex(std::size_t n) : n_(n) {}

    Column column(const ExponentPair& e);
    const ExponentPair& monomial(Column c) const;
    /// Monomials of exactly this degree, in column order.
    const std::vector<ExponentPair>& of_degree(std::uint32_t degree);
    static std::uint32_t degree_of(Column c) { return kMaxDegree - static_cast<std::uint32_t>(c >> 32); }

private:
    static constexpr std::uint32_t kMaxDegree = 1u << 20;

    struct Hash {
        std::size_t operator()(const ExponentPair& e) const;
    };

    void ensure(std::uint32_t degree);

    std::size_t n_;
    std::vector<std::vector<ExponentPair>> by_degree_;
    std::unordered_map<ExponentPair, Column, Hash> columns_;
};

/// Incremental echelon form of the truncated ideal. Rows m*g are inserted in
/// order of their Bernstein degree s (the row tag), so the approximation of I
/// at any truncation level s can be queried after growing past it.
class ModuleEngine {
public:
    explicit ModuleEngine(LeftIdealPresentation ideal);

    const LeftIdealPresentation& ideal() const { return ideal_; }
    std::size_t vars() const { return ideal_.vars(); }
    std::uint32_t level_for(std::uint32_t t, std::uint32_t slack) const {
        return t + ideal_.max_generator_degree() + slack;
    }

    void grow_to(std::uint32_t level);
    std::uint32_t level() const { return grown_ ? level_ : 0; }

    /// dim of the truncated I ∩ B_t using products up to the given level.
    std::size_t ideal_dim(std::uint32_t t, std::uint32_t level);
    /// Echelon rows of the truncated I ∩ B_t.
    std::vector<SparseVector> ideal_rows(std::uint32_t t, std::uint32_t level);

    SparseVector coordinates(const DiffOp& p);
    DiffOp to_diffop(const SparseVector& v) const;
    /// Canonical remainder of p modulo the truncation at the given level.
    SparseVector reduce(const DiffOp& p, std::uint32_t level);

    MonomialIndex& index() { return index_; }

private:
    LeftIdealPresentation ideal_;
    MonomialIndex index_;
    Echelon echelon_;
    std::vector<std::uint32_t> lead_degree_;
    std::uint32_t level_ = 0;
    bool grown_ = false;
};

/// Basis of the truncated I ∩ B_t. Columns list B_t in engine column order.
struct IdealSubspace {
    std::vector<ExponentPair> columns;
    RowReduction reduction;
};

IdealSubspace truncated_ideal_subspace(const LeftIdealPresentation& ideal, std::uint32_t t,
                                       const TruncationParams& params);

struct FiltrationSnapshot {
    std::uint32_t t = 0;
    std::vector<ExponentPair> columns;
    RationalMatrix basis{0, 0};  // RREF of the truncated I ∩ B_t over `columns`
    std::size_t gamma_dim = 0;
    std::size_t ideal_dim_in_Bt = 0;
    bool stabilized = false;
    std::uint32_t slack_used = 0;
};

/// dim_k Gamma_t = dim B_t - dim(I ∩ B_t). The value is reported at the
/// configured slack; `stabilized` holds when it is unchanged over the next
/// `stabilization_window` slack increments.
FiltrationSnapshot gamma_dim(const LeftIdealPresentation& ideal, std::uint32_t t, const TruncationParams& params);

struct GammaValue {
    std::size_t value;
    bool stabilized;
};
GammaValue gamma_value(ModuleEngine& engine, std::uint32_t t, const TruncationParams& params);

struct ReducedElement {
    std::uint32_t t = 0;                 // Bernstein degree of the input
    std::vector<Coefficient> coordinates;  // over monomial_basis(n, t, bernstein)
    bool stabilized = false;

    bool is_zero() const;
};

ReducedElement reduce_element(const DiffOp& p, const LeftIdealPresentation& ideal, const TruncationParams& params);
ReducedElement reduce_element(const DiffOp& p, ModuleEngine& engine, const TruncationParams& params);

struct InterleaveResult {
    std::optional<std::uint32_t> width;
    bool stabilized = false;
};

/// Smallest w <= t_max with Gamma_j ⊆ Omega_{j+w} and Omega_j ⊆ Gamma_{j+w}
/// for all j <= t_max.
InterleaveResult interleave_width(const GoodFiltrationSpec& gamma, const GoodFiltrationSpec& omega,
                                  std::uint32_t t_max, const TruncationParams& params);

struct FiltrationDims {
    std::vector<std::size_t> dims;  // dim Gamma_j for j = 0..t_hi
    bool stabilized = false;
};

/// dim Gamma_j of a good filtration for j = 0..t_hi.
FiltrationDims filtration_dims(const GoodFiltrationSpec& spec, std::uint32_t t_hi, const TruncationParams& params);

} // namespace weyl
