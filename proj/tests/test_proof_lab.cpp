#include "oracles.hpp"

#include "weyl/errors.hpp"
#include "weyl/parser.hpp"
#include "weyl/proof_lab.hpp"

#include <doctest.h>

using namespace weyl;

namespace {

Polynomial poly(const char* s, std::size_t n = 1) { return parse_polynomial(s, n); }

} // namespace

TEST_SUITE("proof-lab") {

TEST_CASE("product rule") {
    CHECK(check_product_rule(poly("x1"), 0).holds());
    CHECK(check_product_rule(poly("7"), 0).holds());
    CHECK(check_product_rule(poly("x1^2*x2", 2), 1).holds());
    const auto s = product_rule_suite(7, 2);
    CHECK(s.passed == 200);
    CHECK(s.verdict() == Verdict::pass);
}

TEST_CASE("random polynomials are reproducible") {
    std::mt19937_64 a(42), b(42);
    for (int k = 0; k < 20; ++k) {
        const auto p = random_polynomial(a, 3, 4);
        CHECK(p == random_polynomial(b, 3, 4));
        CHECK(p.degree() <= Degree(4));
    }
}

TEST_CASE("vanishing") {
    CHECK(check_vanishing(poly("x1"), 0, 1, 0).holds());
    CHECK(check_vanishing(poly("x1^2 - 2"), 0, 2, 1).holds());
    CHECK(check_vanishing(poly("x1^3 + x1 + 1"), 0, 3, 2).holds());
    CHECK_THROWS(check_vanishing(poly("x1"), 0, 1, 1));
    CHECK_THROWS(check_vanishing(poly("2*x1"), 0, 2, 1));
    CHECK_THROWS(check_vanishing(poly("x1*x2", 2), 0, 2, 1));
}

TEST_CASE("s = t does not vanish") {
    // x d z = -z in D/Dx
    const LeftIdealPresentation I(1, {DiffOp::x(1, 0)});
    const auto r = reduce_element(parse("x1*d1", 1), I, {});
    CHECK_FALSE(r.is_zero());
    CHECK(reduce_element(parse("x1*d1 + 1", 1), I, {}).is_zero());
}

TEST_CASE("recursion") {
    for (const char* f : {"x1", "x1^2 - 2", "x1^3 + x1 + 1"}) {
        for (std::uint32_t s = 1; s <= 4; ++s) {
            for (std::uint32_t t = 1; t <= 4; ++t) CHECK(check_recursion(poly(f), 0, s, t).holds());
        }
    }
    CHECK_THROWS(check_recursion(poly("x1"), 0, 0, 1));
}

TEST_CASE("factorial identity") {
    CHECK(check_factorial_identity(poly("x1"), 0, 0).holds());
    CHECK(check_factorial_identity(poly("x1"), 0, 2).holds());
    CHECK(check_factorial_identity(poly("x1^2 - 2"), 0, 1).holds());
    // x^2 d^2 z = 2 z in D/Dx
    const LeftIdealPresentation I(1, {DiffOp::x(1, 0)});
    CHECK(reduce_element(parse("x1^2*d1^2 - 2", 1), I, {}).is_zero());
}

TEST_CASE("binomial count") {
    for (std::uint32_t h = 0; h <= 3; ++h) {
        for (std::uint32_t t = 0; t <= 5; ++t) CHECK(binomial_count(h, t) == oracle::count_monomials(h, t));
    }
    CHECK(binomial_count(2, 2) == 6);
    CHECK(binomial_count(0, 9) == 1);
    CHECK(binomial_count(3, 5) == 56);
}

TEST_CASE("independence") {
    CHECK(independence_rank(1, 0, 4).rank == 1);
    const auto r = independence_rank(1, 1, 3);
    CHECK(r.rank == 4);
    CHECK(r.verdict == Verdict::pass);
    const auto r2 = independence_rank(2, 2, 2);
    CHECK(r2.rank == 6);
    CHECK(r2.stabilized);
    CHECK_THROWS(independence_rank(1, 2, 1));
}

TEST_CASE("submodule monotonicity") {
    const LeftIdealPresentation d12(2, parse_list("d1, d2", 2));
    auto r = submodule_monotonicity(d12, DiffOp::constant(2, 1));
    CHECK(r.d_sub == r.d_full);
    r = submodule_monotonicity(d12, DiffOp::x(2, 0));
    CHECK(r.d_sub == Degree(2));
    CHECK(r.holds());
    r = submodule_monotonicity({1, {}}, DiffOp::x(1, 0));
    CHECK(r.d_sub == Degree(2));
    CHECK(r.d_full == Degree(2));
    CHECK_THROWS(submodule_monotonicity(d12, DiffOp::d(2, 0)));
}

TEST_CASE("corpus run flags bad entries") {
    std::vector<CorpusEntry> corpus{parse_corpus("n=1\ngen: d1\nexpect_d: 2\n", "wrong"),
                                    parse_corpus("n=1\ngen: 1\n", "zero"),
                                    parse_corpus("n=2\ngen: d1\ngen: d2\n", "ok")};
    const auto report = bernstein_corpus(corpus, {}, 2);
    REQUIRE(report.rows.size() == 3);
    CHECK(report.rows[0].name == "ok");
    CHECK(report.rows[0].verdict == Verdict::pass);
    CHECK(report.rows[1].verdict == Verdict::fail);
    CHECK(report.rows[2].verdict == Verdict::fail);
    CHECK(report.failures() == 2);
    CHECK(to_json(report).dump() == to_json(bernstein_corpus(corpus, {}, 1)).dump());
}

}
