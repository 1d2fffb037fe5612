#include "oracles.hpp"

#include "weyl/diffop.hpp"
#include "weyl/errors.hpp"
#include "weyl/parser.hpp"
#include "weyl/proof_lab.hpp"

#include <doctest.h>

#include <random>

using namespace weyl;

namespace {

DiffOp op(const char* s, std::size_t n) { return parse(s, n); }

DiffOp random_op(std::mt19937_64& rng, std::size_t n, std::uint32_t max_deg, std::size_t max_terms) {
    std::uniform_int_distribution<std::size_t> terms(1, max_terms);
    std::uniform_int_distribution<std::uint32_t> deg(0, max_deg);
    std::uniform_int_distribution<std::size_t> slot(0, 2 * n - 1);
    std::uniform_int_distribution<int> num(-5, 5);
    DiffOp::Terms out;
    for (std::size_t k = terms(rng); k > 0; --k) {
        ExponentPair e(n);
        for (auto j = deg(rng); j > 0; --j) {
            auto s = slot(rng);
            ++(s < n ? e.a[s] : e.b[s - n]);
        }
        accumulate(out, e, Coefficient(num(rng)));
    }
    return DiffOp(n, std::move(out));
}

} // namespace

TEST_SUITE("weyl-core") {

TEST_CASE("degrevlex order") {
    CHECK(degrevlex_compare(Exponents{2, 0}, Exponents{1, 0}) > 0);
    CHECK(degrevlex_compare(Exponents{1, 1}, Exponents{2, 0}) < 0);
    CHECK(degrevlex_compare(Exponents{0, 3}, Exponents{0, 3}) == 0);
    // x1 > d1 in degree 1 for A_1
    CHECK(degrevlex_compare(ExponentPair({1}, {0}), ExponentPair({0}, {1})) > 0);
}

TEST_CASE("Degree arithmetic") {
    CHECK(Degree::neg_inf() < Degree(0));
    CHECK((Degree(2) + Degree::neg_inf()).is_neg_inf());
    CHECK(Degree::neg_inf().to_string() == "-inf");
    CHECK_THROWS(Degree::neg_inf().value());
}

TEST_CASE("mul basics") {
    CHECK(mul(DiffOp::d(1, 0), DiffOp::x(1, 0)) == op("x1*d1 + 1", 1));
    CHECK(mul(DiffOp::d(2, 0), DiffOp::x(2, 1)) == op("x2*d1", 2));
    CHECK(mul(pow(DiffOp::d(1, 0), 2), DiffOp::x(1, 0)) == op("x1*d1^2 + 2*d1", 1));
    CHECK_THROWS_AS(mul(DiffOp::d(1, 0), DiffOp::d(2, 0)), DimensionMismatch);
}

TEST_CASE("add and commutator") {
    CHECK(add(op("x1*d1", 1), op("-x1*d1", 1)).is_zero());
    CHECK(add(DiffOp::d(2, 0), DiffOp::d(2, 1)) == op("d1 + d2", 2));
    CHECK(add(op("2*x1", 1), op("3*x1", 1)) == op("5*x1", 1));
    CHECK(commutator(DiffOp::d(1, 0), DiffOp::x(1, 0)) == DiffOp::constant(1, 1));
    CHECK(commutator(DiffOp::d(2, 0), DiffOp::d(2, 1)).is_zero());
    CHECK(commutator(DiffOp::d(1, 0), op("x1^2", 1)) == op("2*x1", 1));
    CHECK_THROWS_AS(add(DiffOp::d(1, 0), DiffOp::d(3, 0)), DimensionMismatch);
}

TEST_CASE("mul agrees with word rewriting") {
    std::mt19937_64 rng(11);
    for (std::size_t n = 1; n <= 3; ++n) {
        for (int k = 0; k < 60; ++k) {
            const auto p = random_op(rng, n, 3, 3);
            const auto q = random_op(rng, n, 3, 3);
            REQUIRE(mul(p, q) == oracle::mul(p, q));
        }
    }
}

TEST_CASE("ring axioms") {
    std::mt19937_64 rng(5);
    for (int k = 0; k < 40; ++k) {
        const auto p = random_op(rng, 2, 3, 3);
        const auto q = random_op(rng, 2, 3, 3);
        const auto r = random_op(rng, 2, 2, 3);
        CHECK(mul(mul(p, q), r) == mul(p, mul(q, r)));
        CHECK(mul(p, add(q, r)) == add(mul(p, q), mul(p, r)));
        CHECK(mul(add(p, q), r) == add(mul(p, r), mul(q, r)));
        CHECK(mul(p, DiffOp::constant(2, 1)) == p);
        // Jacobi
        const auto jac = add(add(commutator(p, commutator(q, r)), commutator(q, commutator(r, p))),
                             commutator(r, commutator(p, q)));
        CHECK(jac.is_zero());
    }
}

TEST_CASE("apply") {
    CHECK(apply(pow(DiffOp::d(1, 0), 3), parse_polynomial("x1^3", 1)) == Polynomial::constant(1, 6));
    for (std::uint32_t k = 0; k < 7; ++k) {
        const auto f = Polynomial::monomial({k}, 1);
        CHECK(apply(op("x1*d1", 1), f) == scale(f, k));
    }
    CHECK(apply(DiffOp::d(1, 0), Polynomial::constant(1, 1)).is_zero());
    CHECK_THROWS_AS(apply(DiffOp::d(1, 0), Polynomial::constant(2, 1)), DimensionMismatch);
}

TEST_CASE("apply agrees with monomial formula") {
    for (std::size_t n = 1; n <= 2; ++n) {
        oracle::for_each_exponent(2 * n, 4, [&](const Exponents& ab) {
            ExponentPair e(Exponents(ab.begin(), ab.begin() + n), Exponents(ab.begin() + n, ab.end()));
            oracle::for_each_exponent(n, 4, [&](const Exponents& c) {
                REQUIRE(apply(DiffOp::monomial(e, 1), Polynomial::monomial(c, 1)) == oracle::apply_monomial(e, c));
            });
        });
    }
}

TEST_CASE("apply is an action") {
    std::mt19937_64 rng(3);
    for (int k = 0; k < 30; ++k) {
        const auto p = random_op(rng, 2, 3, 3);
        const auto q = random_op(rng, 2, 3, 3);
        const auto f = random_polynomial(rng, 2, 5);
        CHECK(apply(mul(p, q), f) == apply(p, apply(q, f)));
    }
}

TEST_CASE("apply with truncation") {
    const auto f = parse_polynomial("1 + x1 + x1^2 + x1^3", 1);
    CHECK(apply(DiffOp::x(1, 0), f, 2) == parse_polynomial("x1 + x1^2", 1));
    CHECK(truncate(f, 1) == parse_polynomial("1 + x1", 1));
}

TEST_CASE("degrees") {
    const auto p = op("x1^5*d1*d2", 2);
    CHECK(order_degree(p) == Degree(2));
    CHECK(order_degree(op("x1^5", 1)) == Degree(0));
    CHECK(order_degree(DiffOp(1)).is_neg_inf());
    CHECK(bernstein_degree(p) == Degree(7));
    CHECK(bernstein_degree(DiffOp::constant(1, 1)) == Degree(0));
    CHECK(bernstein_degree(op("x1*d1 + d1", 1)) == Degree(2));
}

TEST_CASE("principal symbol") {
    const auto p = op("x1*d1^2 + d1", 1);
    CHECK(print(principal_symbol(p, Filtration::order)) == "x1*xi1^2");
    CHECK(print(principal_symbol(p, Filtration::bernstein)) == "x1*xi1^2");
    CHECK(print(principal_symbol(op("d1*x1", 1), Filtration::order)) == "x1*xi1");
    CHECK_THROWS_AS(principal_symbol(DiffOp(1), Filtration::order), UndefinedSymbol);
}

TEST_CASE("symbols multiply") {
    // gr is commutative and sigma(pq) = sigma(p) sigma(q)
    std::mt19937_64 rng(17);
    for (int k = 0; k < 30; ++k) {
        const auto p = random_op(rng, 2, 3, 3);
        const auto q = random_op(rng, 2, 3, 3);
        if (p.is_zero() || q.is_zero()) continue;
        for (auto f : {Filtration::order, Filtration::bernstein}) {
            CHECK(principal_symbol(mul(p, q), f) == mul(principal_symbol(p, f), principal_symbol(q, f)));
            CHECK(filtration_degree(mul(p, q), f) == filtration_degree(p, f) + filtration_degree(q, f));
        }
    }
}

TEST_CASE("polynomial ring") {
    const auto f = parse_polynomial("x1^2*x2", 2);
    CHECK(derivative(f, 1) == parse_polynomial("x1^2", 2));
    CHECK(derivative(f, 0) == parse_polynomial("2*x1*x2", 2));
    CHECK(pow(parse_polynomial("x1 + 1", 1), 2) == parse_polynomial("x1^2 + 2*x1 + 1", 1));
    CHECK(f.degree() == Degree(3));
    CHECK(Polynomial(2).degree().is_neg_inf());
}

TEST_CASE("binomial and falling factorial") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(2, 5) == 0);
    CHECK(falling_factorial(5, 2) == 20);
    CHECK(falling_factorial(3, 4) == 0);
}

}
