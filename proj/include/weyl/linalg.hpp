#pragma once

#include "weyl/monomial.hpp"

#include <cstdint>
#include <limits>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

namespace weyl {

/// Column position. Smaller columns are further left and win pivot choices.
using Column = std::uint64_t;

/// Sparse row: entries sorted by column, no stored zeros.
class SparseVector {
public:
    using Entry = std::pair<Column, Coefficient>;

    SparseVector() = default;
    /// Sorts, merges duplicate columns and drops zeros.
    explicit SparseVector(std::vector<Entry> entries);

    const std::vector<Entry>& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }
    const Entry& lead() const { return entries_.front(); }
    Coefficient at(Column c) const;

    /// this -= factor * other
    void sub_scaled(const Coefficient& factor, const SparseVector& other);
    void scale(const Coefficient& factor);

    friend bool operator==(const SparseVector&, const SparseVector&) = default;

private:
    std::vector<Entry> entries_;
};

class RationalMatrix {
public:
    RationalMatrix() : RationalMatrix(0, 0) {}
    RationalMatrix(std::size_t rows, std::size_t cols);
    RationalMatrix(std::size_t cols, std::vector<SparseVector> rows);
    static RationalMatrix from_dense(const std::vector<std::vector<Coefficient>>& rows);

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    const std::vector<SparseVector>& row_data() const { return rows_; }
    Coefficient at(std::size_t r, std::size_t c) const { return rows_.at(r).at(c); }
    std::vector<std::vector<Coefficient>> to_dense() const;

    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
    std::size_t cols_;
    std::vector<SparseVector> rows_;
};

struct RowReduction {
    RationalMatrix rref;  // nonzero rows first, pivot columns increasing, then zero rows
    std::size_t rank = 0;
    std::vector<Column> pivots;
};

/// Exact reduced row echelon form; the pivot of each row is its leftmost nonzero column.
RowReduction row_reduce(const RationalMatrix& m);

/// Echelon basis grown one row at a time. Stored rows are monic in their lead
/// column and never modified afterwards, so the rows carrying tag <= L form an
/// echelon basis of the span of everything inserted with tag <= L.
class Echelon {
public:
    static constexpr std::uint32_t all_tags = std::numeric_limits<std::uint32_t>::max();

    struct Row {
        SparseVector vector;
        std::uint32_t tag;
    };

    /// Returns true when v enlarged the span. Tags must be nondecreasing.
    bool insert(SparseVector v, std::uint32_t tag = 0);

    /// Canonical remainder of v modulo the span of rows with tag <= max_tag:
    /// zero in every pivot column of that span.
    SparseVector reduce(SparseVector v, std::uint32_t max_tag = all_tags) const;

    bool contains(const SparseVector& v, std::uint32_t max_tag = all_tags) const {
        return reduce(v, max_tag).is_zero();
    }

    std::size_t rank() const { return rows_.size(); }
    const std::vector<Row>& rows() const { return rows_; }

private:
    const Row* pivot_row(Column c, std::uint32_t max_tag) const;

    std::vector<Row> rows_;
    std::unordered_map<Column, std::size_t> pivots_;
    std::uint32_t last_tag_ = 0;
};

} // namespace weyl
