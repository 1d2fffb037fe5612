#include "oracles.hpp"

#include "weyl/errors.hpp"
#include "weyl/hilbert.hpp"
#include "weyl/parser.hpp"

#include <doctest.h>

using namespace weyl;

namespace {

std::vector<HilbertSample> samples(std::uint32_t count, const std::function<std::size_t(std::uint32_t)>& h) {
    std::vector<HilbertSample> out;
    for (std::uint32_t t = 0; t < count; ++t) out.push_back({t, h(t), true});
    return out;
}

std::size_t as_size(const Coefficient& c) { return c.get_num().get_ui(); }

} // namespace

TEST_SUITE("hilbert-dim") {

TEST_CASE("finite difference fit") {
    const auto lin = finite_difference_fit(samples(6, [](auto t) { return t + 1; }));
    CHECK(lin.degree == Degree(1));
    CHECK(lin.binomial_coeffs == std::vector<Coefficient>{1, 1});
    CHECK(lin.exact_on_window);

    const auto quad = finite_difference_fit(samples(7, [](auto t) { return as_size(oracle::choose(t + 2, 2)); }));
    CHECK(quad.degree == Degree(2));
    CHECK(quad.leading == 1);
    CHECK(quad.evaluate(20) == oracle::choose(22, 2));

    const auto zero = finite_difference_fit(samples(5, [](auto) { return 0; }));
    CHECK(zero.degree.is_neg_inf());

    CHECK_THROWS_AS(finite_difference_fit(samples(3, [](auto t) { return t * t; })), InsufficientData);
    CHECK_THROWS_AS(finite_difference_fit(samples(2, [](auto t) { return t; })), InsufficientData);
}

TEST_CASE("trailing fit skips irregular start") {
    auto s = samples(10, [](auto t) { return 2 * t + 1; });
    s[0].value = 7;
    s[1].value = 0;
    const auto fit = trailing_fit(s, 4);
    REQUIRE(fit);
    CHECK(fit->degree == Degree(1));
    CHECK(fit->t_lo >= 2);
    CHECK(multiplicity(*fit) == 2);
}

TEST_CASE("multiplicity") {
    for (std::size_t n = 1; n <= 3; ++n) {
        const auto m = static_cast<std::int64_t>(n);
        auto f = finite_difference_fit(samples(3 * n + 4, [&](auto t) { return as_size(oracle::choose(t + m, m)); }));
        CHECK(multiplicity(f) == 1);
        f = finite_difference_fit(samples(3 * n + 4, [&](auto t) { return as_size(oracle::choose(t + 2 * m, 2 * m)); }));
        CHECK(multiplicity(f) == 1);
    }
}

TEST_CASE("module dimension") {
    const auto d12 = module_dimension({2, parse_list("d1, d2", 2)});
    CHECK(d12.d == Degree(2));
    for (const auto& s : d12.samples) CHECK(Coefficient(s.value) == oracle::choose(s.t + 2, 2));

    CHECK(module_dimension({1, {}}).d == Degree(2));
    CHECK(module_dimension({1, parse_list("x1", 1)}).d == Degree(1));
    CHECK_THROWS_AS(module_dimension({1, parse_list("1", 1)}), ZeroModule);
    CHECK_THROWS_AS(module_dimension({2, parse_list("d1, x1", 2)}), ZeroModule);
}

TEST_CASE("tiny budget is inconclusive, never wrong") {
    DimensionConfig cfg;
    cfg.budget = 3;
    cfg.initial_t_hi = 3;
    CHECK_THROWS_AS(module_dimension({1, parse_list("x1*d1 - 1", 1)}, cfg), Inconclusive);
}

TEST_CASE("filtration independence of the degree") {
    const LeftIdealPresentation I(2, parse_list("d1, d2", 2));
    const auto a = filtration_dimension(GoodFiltrationSpec::standard(I));
    const auto b = filtration_dimension({I, parse_list("1, x1", 2), {0, 0}});
    const auto c = filtration_dimension({I, parse_list("1", 2), {3}});
    CHECK(a.d == b.d);
    CHECK(a.d == c.d);
    CHECK(multiplicity(a.fit) == multiplicity(c.fit));
}

TEST_CASE("json report") {
    const auto r = module_dimension({1, parse_list("d1", 1)});
    const auto j = to_json(r.fit, 1);
    CHECK(j["degree"] == 1);
    CHECK(j["multiplicity"] == "1");
    CHECK(j["stabilized"] == true);
    CHECK(j.dump() == to_json(module_dimension({1, parse_list("d1", 1)}).fit, 1).dump());
}

}
