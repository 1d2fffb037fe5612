#include "weyl/linalg.hpp"

#include "weyl/errors.hpp"

#include <algorithm>

namespace weyl {

SparseVector::SparseVector(std::vector<Entry> entries) {
    std::sort(entries.begin(), entries.end(), [](const Entry& l, const Entry& r) { return l.first < r.first; });
    for (auto& e : entries) {
        if (!entries_.empty() && entries_.back().first == e.first) {
            entries_.back().second += e.second;
        } else {
            entries_.push_back(std::move(e));
        }
    }
    std::erase_if(entries_, [](const Entry& e) { return sgn(e.second) == 0; });
}

Coefficient SparseVector::at(Column c) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), c,
                               [](const Entry& e, Column col) { return e.first < col; });
    return (it != entries_.end() && it->first == c) ? it->second : Coefficient(0);
}

void SparseVector::sub_scaled(const Coefficient& factor, const SparseVector& other) {
    if (sgn(factor) == 0 || other.is_zero()) return;
    std::vector<Entry> out;
    out.reserve(entries_.size() + other.entries_.size());
    auto a = entries_.begin();
    auto b = other.entries_.begin();
    while (a != entries_.end() || b != other.entries_.end()) {
        if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
            out.push_back(std::move(*a++));
        } else if (a == entries_.end() || b->first < a->first) {
            out.emplace_back(b->first, -factor * b->second);
            ++b;
        } else {
            a->second -= factor * b->second;
            if (sgn(a->second) != 0) out.push_back(std::move(*a));
            ++a;
            ++b;
        }
    }
    entries_ = std::move(out);
}

void SparseVector::scale(const Coefficient& factor) {
    if (sgn(factor) == 0) {
        entries_.clear();
        return;
    }
    for (auto& e : entries_) e.second *= factor;
}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}

RationalMatrix::RationalMatrix(std::size_t cols, std::vector<SparseVector> rows) : cols_(cols), rows_(std::move(rows)) {
    for (const auto& r : rows_) {
        if (!r.is_zero() && r.entries().back().first >= cols_) throw Error("matrix entry outside the column range");
    }
}

RationalMatrix RationalMatrix::from_dense(const std::vector<std::vector<Coefficient>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    std::vector<SparseVector> sparse;
    for (const auto& r : rows) {
        if (r.size() != cols) throw Error("ragged matrix");
        std::vector<SparseVector::Entry> e;
        for (std::size_t j = 0; j < r.size(); ++j) {
            if (sgn(r[j]) != 0) e.emplace_back(j, r[j]);
        }
        sparse.emplace_back(std::move(e));
    }
    return RationalMatrix(cols, std::move(sparse));
}

std::vector<std::vector<Coefficient>> RationalMatrix::to_dense() const {
    std::vector<std::vector<Coefficient>> out(rows_.size(), std::vector<Coefficient>(cols_));
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        for (const auto& [c, v] : rows_[i].entries()) out[i][c] = v;
    }
    return out;
}

RowReduction row_reduce(const RationalMatrix& m) {
    Echelon ech;
    for (const auto& r : m.row_data()) ech.insert(r);

    std::vector<SparseVector> reduced;
    std::vector<Column> pivots;
    for (const auto& row : ech.rows()) {
        const auto& v = row.vector;
        const Column p = v.lead().first;
        SparseVector tail(std::vector<SparseVector::Entry>(v.entries().begin() + 1, v.entries().end()));
        auto rem = ech.reduce(std::move(tail));
        std::vector<SparseVector::Entry> entries{{p, Coefficient(1)}};
        entries.insert(entries.end(), rem.entries().begin(), rem.entries().end());
        reduced.emplace_back(std::move(entries));
        pivots.push_back(p);
    }
    std::vector<std::size_t> order(reduced.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](auto l, auto r) { return pivots[l] < pivots[r]; });

    std::vector<SparseVector> rows;
    std::vector<Column> sorted_pivots;
    for (auto i : order) {
        rows.push_back(std::move(reduced[i]));
        sorted_pivots.push_back(pivots[i]);
    }
    const std::size_t rank = rows.size();
    rows.resize(m.rows());
    return {RationalMatrix(m.cols(), std::move(rows)), rank, std::move(sorted_pivots)};
}

const Echelon::Row* Echelon::pivot_row(Column c, std::uint32_t max_tag) const {
    auto it = pivots_.find(c);
    if (it == pivots_.end()) return nullptr;
    const Row& row = rows_[it->second];
    return row.tag <= max_tag ? &row : nullptr;
}

bool Echelon::insert(SparseVector v, std::uint32_t tag) {
    if (tag < last_tag_) throw Error("echelon tags must be inserted in nondecreasing order");
    last_tag_ = tag;
    while (!v.is_zero()) {
        const Row* row = pivot_row(v.lead().first, all_tags);
        if (row == nullptr) break;
        const Coefficient factor = v.lead().second;
        v.sub_scaled(factor, row->vector);
    }
    if (v.is_zero()) return false;
    const Coefficient inv = 1 / v.lead().second;
    v.scale(inv);
    pivots_.emplace(v.lead().first, rows_.size());
    rows_.push_back({std::move(v), tag});
    return true;
}

SparseVector Echelon::reduce(SparseVector v, std::uint32_t max_tag) const {
    std::size_t idx = 0;
    while (idx < v.size()) {
        const auto& [col, coeff] = v.entries()[idx];
        const Row* row = pivot_row(col, max_tag);
        if (row == nullptr) {
            ++idx;
            continue;
        }
        const Coefficient factor = coeff;
        // Pivot rows only touch columns >= col, so entries before idx are final.
        v.sub_scaled(factor, row->vector);
    }
    return v;
}

} // namespace weyl
