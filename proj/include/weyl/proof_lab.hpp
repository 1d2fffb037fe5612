#pragma once

#include "weyl/corpus.hpp"
#include "weyl/hilbert.hpp"

#include <json.hpp>

#include <random>
#include <string>
#include <vector>

namespace weyl {

enum class Verdict { pass, fail, inconclusive };

std::string to_string(Verdict v);

struct IdentityReport {
    std::string identity_name;
    nlohmann::json parameters = nlohmann::json::object();
    Verdict verdict = Verdict::fail;
    std::string witness;  // offending operator or coordinates; empty on pass
    std::string detail;

    bool holds() const { return verdict == Verdict::pass; }
};

nlohmann::json to_json(const IdentityReport& r);

/// d_i f = f d_i + df/dx_i, compared as normal forms.
IdentityReport check_product_rule(const Polynomial& f, std::size_t i);

/// Random polynomial with total degree <= max_degree.
Polynomial random_polynomial(std::mt19937_64& rng, std::size_t n, std::uint32_t max_degree, std::size_t max_terms = 5);

struct SuiteSummary {
    std::vector<IdentityReport> reports;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t inconclusive = 0;

    void add(IdentityReport r);
    Verdict verdict() const;
};

/// `cases` random (f, i) with f in n variables and deg f <= max_degree.
SuiteSummary product_rule_suite(std::uint64_t seed, std::size_t n, std::size_t cases = 200,
                                std::uint32_t max_degree = 4);

/// f(x_i)^s d_i^t z = 0 in D/Df for s > t, where f is monic in x_i alone.
IdentityReport check_vanishing(const Polynomial& f, std::size_t i, std::uint32_t s, std::uint32_t t,
                               const TruncationParams& params = {});

/// Operator identity f^s d^t = d (f^s d^{t-1}) - s f' f^{s-1} d^{t-1}, t >= 1, s >= 1.
IdentityReport check_recursion(const Polynomial& f, std::size_t i, std::uint32_t s, std::uint32_t t);

/// f^t d^t z = (-1)^t t! (f')^t z together with (f')^t z != 0, in D/Df.
IdentityReport check_factorial_identity(const Polynomial& f, std::size_t i, std::uint32_t t,
                                        const TruncationParams& params = {});

/// C(t + h, h): the number of monomials of degree <= t in h variables.
mpz_class binomial_count(std::uint32_t h, std::uint32_t t);

struct IndependenceReport {
    std::size_t n = 0;
    std::size_t h = 0;
    std::uint32_t t = 0;
    std::size_t rank = 0;
    mpz_class expected;
    bool stabilized = false;
    Verdict verdict = Verdict::fail;
};

/// Rank of {d_1^{t_1}..d_h^{t_h} z : sum t_i <= t} in M = D/D(x_1, .., x_h).
IndependenceReport independence_rank(std::size_t n, std::size_t h, std::uint32_t t, const TruncationParams& params = {});

struct SubmoduleReport {
    Degree d_sub = Degree::neg_inf();
    Degree d_full = Degree::neg_inf();
    Verdict verdict = Verdict::fail;
    std::string detail;

    bool holds() const { return verdict == Verdict::pass; }
};

/// d(D p) <= d(D/I) with D p ⊆ D/I filtered by B_t p.
SubmoduleReport submodule_monotonicity(const LeftIdealPresentation& ideal, const DiffOp& p,
                                       const DimensionConfig& config = {});

struct CorpusRow {
    std::string name;
    std::size_t n = 0;
    Degree d = Degree::neg_inf();
    std::optional<Coefficient> multiplicity;
    bool stabilized = false;
    double runtime_ms = 0;
    Verdict verdict = Verdict::fail;
    std::string detail;
};

struct CorpusReport {
    std::vector<CorpusRow> rows;  // sorted by name

    std::size_t failures() const;
    std::size_t inconclusive() const;
};

/// d(M) for every entry; fails any entry with d < n, d > 2n, a zero module
/// or a mismatch against expect_d. Runs up to `threads` entries at once.
CorpusReport bernstein_corpus(const std::vector<CorpusEntry>& corpus, const DimensionConfig& config,
                              unsigned threads = 1);

nlohmann::json to_json(const CorpusReport& report);
std::string to_table(const CorpusReport& report);

} // namespace weyl
