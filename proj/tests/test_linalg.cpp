#include "weyl/linalg.hpp"

#include <doctest.h>

#include <random>

using namespace weyl;

namespace {

using Dense = std::vector<std::vector<Coefficient>>;

// Textbook Gauss-Jordan on a dense copy.
std::size_t dense_rank(Dense m) {
    std::size_t rank = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        std::size_t p = rank;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[rank]);
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == rank || m[r][c] == 0) continue;
            const Coefficient f = m[r][c] / m[rank][c];
            for (std::size_t k = 0; k < cols; ++k) m[r][k] -= f * m[rank][k];
        }
        ++rank;
    }
    return rank;
}

} // namespace

TEST_SUITE("linalg") {

TEST_CASE("sparse vector normalizes") {
    SparseVector v({{3, 1}, {1, 2}, {3, -1}, {2, 0}});
    REQUIRE(v.size() == 1);
    CHECK(v.lead().first == 1);
    CHECK(v.at(3) == 0);
}

TEST_CASE("row_reduce examples") {
    const auto id = RationalMatrix::from_dense({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    const auto r = row_reduce(id);
    CHECK(r.rank == 3);
    CHECK(r.rref == id);

    const auto r2 = row_reduce(RationalMatrix::from_dense({{1, 2}, {2, 4}}));
    CHECK(r2.rank == 1);
    CHECK(r2.rref.to_dense() == Dense{{1, 2}, {0, 0}});

    const auto r3 = row_reduce(RationalMatrix::from_dense(
        {{Coefficient(1, 2), Coefficient(1, 3)}, {Coefficient(1, 4), Coefficient(1, 6)}}));
    CHECK(r3.rank == 1);
    CHECK(r3.rref.at(0, 1) == Coefficient(2, 3));
}

TEST_CASE("rank agrees with dense elimination") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> val(-3, 3);
    std::uniform_int_distribution<int> sparse(0, 2);
    for (int k = 0; k < 100; ++k) {
        const std::size_t rows = 1 + k % 6;
        const std::size_t cols = 1 + (k / 6) % 7;
        Dense m(rows, std::vector<Coefficient>(cols));
        for (auto& row : m) {
            for (auto& x : row) x = sparse(rng) == 0 ? Coefficient(val(rng), 1 + sparse(rng)) : Coefficient(0);
        }
        const auto r = row_reduce(RationalMatrix::from_dense(m));
        REQUIRE(r.rank == dense_rank(m));
        // RREF: pivots are 1 and alone in their column
        for (std::size_t i = 0; i < r.rank; ++i) {
            CHECK(r.rref.at(i, r.pivots[i]) == 1);
            for (std::size_t j = 0; j < rows; ++j) {
                if (j != i) CHECK(r.rref.at(j, r.pivots[i]) == 0);
            }
        }
    }
}

TEST_CASE("echelon tags") {
    Echelon e;
    CHECK(e.insert(SparseVector({{0, 1}, {1, 1}}), 1));
    CHECK(e.insert(SparseVector({{1, 1}}), 2));
    CHECK_FALSE(e.insert(SparseVector({{0, 2}}), 2));
    CHECK(e.contains(SparseVector({{0, 5}}), 2));
    CHECK_FALSE(e.contains(SparseVector({{0, 5}}), 1));
    CHECK(e.reduce(SparseVector({{0, 1}}), 1) == SparseVector({{1, -1}}));
    CHECK_THROWS(e.insert(SparseVector({{2, 1}}), 1));
}

}
