#include "weyl/proof_lab.hpp"

#include "weyl/errors.hpp"
#include "weyl/parser.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <iomanip>
#include <sstream>
#include <thread>

namespace weyl {

std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::pass: return "PASS";
    case Verdict::fail: return "FAIL";
    case Verdict::inconclusive: return "INCONCLUSIVE";
    }
    return "?";
}

nlohmann::json to_json(const IdentityReport& r) {
    nlohmann::json out;
    out["identity"] = r.identity_name;
    out["parameters"] = r.parameters;
    out["verdict"] = to_string(r.verdict);
    if (!r.witness.empty()) out["witness"] = r.witness;
    if (!r.detail.empty()) out["detail"] = r.detail;
    return out;
}

IdentityReport check_product_rule(const Polynomial& f, std::size_t i) {
    const auto n = f.vars();
    if (i >= n) throw Error("variable index out of range");
    const auto F = DiffOp::from_polynomial(f);
    const auto d = DiffOp::d(n, i);
    const auto lhs = mul(d, F);
    const auto rhs = add(mul(F, d), DiffOp::from_polynomial(derivative(f, i)));

    IdentityReport r;
    r.identity_name = "product_rule";
    r.parameters = {{"f", print(f)}, {"i", i + 1}, {"n", n}};
    r.verdict = lhs == rhs ? Verdict::pass : Verdict::fail;
    if (!r.holds()) r.witness = print(sub(lhs, rhs));
    return r;
}

Polynomial random_polynomial(std::mt19937_64& rng, std::size_t n, std::uint32_t max_degree, std::size_t max_terms) {
    std::uniform_int_distribution<std::size_t> terms_dist(1, std::max<std::size_t>(1, max_terms));
    std::uniform_int_distribution<std::uint32_t> degree_dist(0, max_degree);
    std::uniform_int_distribution<std::size_t> var_dist(0, n - 1);
    std::uniform_int_distribution<int> num_dist(-9, 9);
    std::uniform_int_distribution<int> den_dist(1, 4);

    Polynomial::Terms terms;
    const auto count = terms_dist(rng);
    for (std::size_t k = 0; k < count; ++k) {
        Exponents e(n, 0);
        const auto deg = degree_dist(rng);
        for (std::uint32_t j = 0; j < deg; ++j) ++e[var_dist(rng)];
        int num = 0;
        while (num == 0) num = num_dist(rng);
        Coefficient c(num, den_dist(rng));
        c.canonicalize();
        accumulate(terms, e, c);
    }
    return Polynomial(n, std::move(terms));
}

void SuiteSummary::add(IdentityReport r) {
    switch (r.verdict) {
    case Verdict::pass: ++passed; break;
    case Verdict::fail: ++failed; break;
    case Verdict::inconclusive: ++inconclusive; break;
    }
    reports.push_back(std::move(r));
}

Verdict SuiteSummary::verdict() const {
    if (failed > 0) return Verdict::fail;
    if (inconclusive > 0) return Verdict::inconclusive;
    return Verdict::pass;
}

SuiteSummary product_rule_suite(std::uint64_t seed, std::size_t n, std::size_t cases, std::uint32_t max_degree) {
    if (n == 0) throw Error("n must be positive");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> var_dist(0, n - 1);
    SuiteSummary summary;
    for (std::size_t k = 0; k < cases; ++k) {
        auto f = random_polynomial(rng, n, max_degree);
        auto r = check_product_rule(f, var_dist(rng));
        r.parameters["seed"] = seed;
        r.parameters["case"] = k;
        summary.add(std::move(r));
    }
    return summary;
}

namespace {

// f must be monic and nonconstant in x_i alone.
void require_univariate_monic(const Polynomial& f, std::size_t i) {
    if (i >= f.vars()) throw Error("variable index out of range");
    if (f.is_zero()) throw Error("f must be nonzero");
    std::uint32_t top = 0;
    for (const auto& [e, c] : f.terms()) {
        for (std::size_t j = 0; j < e.size(); ++j) {
            if (j != i && e[j] != 0) throw Error("f must be a polynomial in x" + std::to_string(i + 1) + " only");
        }
        top = std::max(top, e[i]);
    }
    if (top == 0) throw Error("f must be nonconstant");
    Exponents lead(f.vars(), 0);
    lead[i] = top;
    if (f.coefficient(lead) != 1) throw Error("f must be monic");
}

DiffOp from_coordinates(std::size_t n, const ReducedElement& r) {
    const auto basis = monomial_basis(n, r.t, Filtration::bernstein);
    DiffOp::Terms terms;
    for (std::size_t k = 0; k < r.coordinates.size(); ++k) {
        if (sgn(r.coordinates[k]) != 0) terms.emplace(basis[k], r.coordinates[k]);
    }
    return DiffOp(n, std::move(terms));
}

// Verdict for a claim "p = 0 in M".
Verdict vanishing_verdict(const ReducedElement& r) {
    if (!r.stabilized) return Verdict::inconclusive;
    return r.is_zero() ? Verdict::pass : Verdict::fail;
}

// Verdict for a claim "p != 0 in M". A zero remainder is conclusive: the
// truncated ideal is always contained in I.
Verdict nonvanishing_verdict(const ReducedElement& r) {
    if (r.is_zero()) return Verdict::fail;
    return r.stabilized ? Verdict::pass : Verdict::inconclusive;
}

Verdict combine(Verdict a, Verdict b) {
    if (a == Verdict::fail || b == Verdict::fail) return Verdict::fail;
    if (a == Verdict::inconclusive || b == Verdict::inconclusive) return Verdict::inconclusive;
    return Verdict::pass;
}

mpz_class factorial(std::uint32_t k) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), k);
    return r;
}

} // namespace

IdentityReport check_vanishing(const Polynomial& f, std::size_t i, std::uint32_t s, std::uint32_t t,
                               const TruncationParams& params) {
    require_univariate_monic(f, i);
    if (s <= t) throw Error("vanishing needs s > t");
    const auto n = f.vars();
    const auto F = DiffOp::from_polynomial(f);
    const LeftIdealPresentation ideal(n, {F});
    const auto p = mul(pow(F, s), pow(DiffOp::d(n, i), t));
    ModuleEngine engine(ideal);
    const auto r = reduce_element(p, engine, params);

    IdentityReport out;
    out.identity_name = "vanishing";
    out.parameters = {{"f", print(f)}, {"i", i + 1}, {"s", s}, {"t", t}, {"n", n}};
    out.verdict = vanishing_verdict(r);
    if (out.verdict != Verdict::pass) out.witness = print(from_coordinates(n, r));
    if (!r.stabilized) out.detail = "truncation not stabilized";
    return out;
}

IdentityReport check_recursion(const Polynomial& f, std::size_t i, std::uint32_t s, std::uint32_t t) {
    if (s == 0 || t == 0) throw Error("recursion identity needs s >= 1 and t >= 1");
    const auto n = f.vars();
    const auto F = DiffOp::from_polynomial(f);
    const auto Fprime = DiffOp::from_polynomial(derivative(f, i));
    const auto d = DiffOp::d(n, i);
    const auto d_prev = pow(d, t - 1);

    const auto lhs = mul(pow(F, s), pow(d, t));
    const auto rhs = sub(mul(d, mul(pow(F, s), d_prev)),
                         scale(mul(Fprime, mul(pow(F, s - 1), d_prev)), Coefficient(s)));

    IdentityReport out;
    out.identity_name = "recursion";
    out.parameters = {{"f", print(f)}, {"i", i + 1}, {"s", s}, {"t", t}, {"n", n}};
    out.verdict = lhs == rhs ? Verdict::pass : Verdict::fail;
    if (!out.holds()) out.witness = print(sub(lhs, rhs));
    return out;
}

IdentityReport check_factorial_identity(const Polynomial& f, std::size_t i, std::uint32_t t,
                                        const TruncationParams& params) {
    require_univariate_monic(f, i);
    const auto n = f.vars();
    const auto F = DiffOp::from_polynomial(f);
    const auto Fprime_t = pow(DiffOp::from_polynomial(derivative(f, i)), t);
    const LeftIdealPresentation ideal(n, {F});

    Coefficient sign_fact(factorial(t));
    if (t % 2 == 1) sign_fact = -sign_fact;
    const auto lhs = mul(pow(F, t), pow(DiffOp::d(n, i), t));
    const auto diff = sub(lhs, scale(Fprime_t, sign_fact));

    ModuleEngine engine(ideal);
    const auto zero_side = reduce_element(diff, engine, params);
    const auto nonzero_side = reduce_element(Fprime_t, engine, params);

    IdentityReport out;
    out.identity_name = "factorial";
    out.parameters = {{"f", print(f)}, {"i", i + 1}, {"t", t}, {"n", n}};
    const auto eq = vanishing_verdict(zero_side);
    const auto nz = nonvanishing_verdict(nonzero_side);
    out.verdict = combine(eq, nz);
    if (eq != Verdict::pass) {
        out.witness = print(from_coordinates(n, zero_side));
        out.detail = "f^t d^t z - (-1)^t t! f'^t z does not reduce to zero";
    } else if (nz != Verdict::pass) {
        out.detail = nz == Verdict::fail ? "f'^t z reduces to zero" : "nonvanishing of f'^t z not stabilized";
    }
    return out;
}

mpz_class binomial_count(std::uint32_t h, std::uint32_t t) { return binomial(t + h, h); }

namespace {

void exponent_tuples(std::size_t h, std::uint32_t budget, Exponents& cur, std::size_t pos,
                     std::vector<Exponents>& out) {
    if (pos == h) {
        out.push_back(cur);
        return;
    }
    for (std::uint32_t v = 0; v <= budget; ++v) {
        cur[pos] = v;
        exponent_tuples(h, budget - v, cur, pos + 1, out);
    }
    cur[pos] = 0;
}

} // namespace

IndependenceReport independence_rank(std::size_t n, std::size_t h, std::uint32_t t, const TruncationParams& params) {
    if (h > n) throw Error("height h exceeds n");
    std::vector<DiffOp> gens;
    for (std::size_t i = 0; i < h; ++i) gens.push_back(DiffOp::x(n, i));
    ModuleEngine engine(LeftIdealPresentation(n, std::move(gens)));

    std::vector<Exponents> taus;
    Exponents cur(h, 0);
    exponent_tuples(h, t, cur, 0, taus);
    std::vector<DiffOp> elements;
    for (const auto& tau : taus) {
        ExponentPair e(n);
        std::copy(tau.begin(), tau.end(), e.b.begin());
        elements.push_back(DiffOp::monomial(std::move(e), 1));
    }

    IndependenceReport out;
    out.n = n;
    out.h = h;
    out.t = t;
    out.expected = binomial_count(static_cast<std::uint32_t>(h), t);
    out.stabilized = true;
    const auto base = engine.level_for(t, params.slack_for(engine.ideal()));
    for (std::uint32_t k = 0; k <= params.stabilization_window; ++k) {
        Echelon e;
        for (const auto& p : elements) e.insert(engine.reduce(p, base + k));
        if (k == 0) {
            out.rank = e.rank();
        } else if (e.rank() != out.rank) {
            out.stabilized = false;
        }
    }
    if (!out.stabilized) {
        out.verdict = Verdict::inconclusive;
    } else {
        out.verdict = mpz_class(static_cast<unsigned long>(out.rank)) == out.expected ? Verdict::pass : Verdict::fail;
    }
    return out;
}

SubmoduleReport submodule_monotonicity(const LeftIdealPresentation& ideal, const DiffOp& p,
                                       const DimensionConfig& config) {
    SubmoduleReport out;
    if (reduce_element(p, ideal, config.truncation).is_zero()) throw Error("p is zero in M");
    try {
        out.d_full = module_dimension(ideal, config).d;
        out.d_sub = filtration_dimension(GoodFiltrationSpec{ideal, {p}, {0}}, config).d;
    } catch (const Inconclusive& e) {
        out.verdict = Verdict::inconclusive;
        out.detail = e.what();
        return out;
    }
    out.verdict = out.d_sub <= out.d_full ? Verdict::pass : Verdict::fail;
    return out;
}

std::size_t CorpusReport::failures() const {
    return static_cast<std::size_t>(
        std::count_if(rows.begin(), rows.end(), [](const auto& r) { return r.verdict == Verdict::fail; }));
}

std::size_t CorpusReport::inconclusive() const {
    return static_cast<std::size_t>(
        std::count_if(rows.begin(), rows.end(), [](const auto& r) { return r.verdict == Verdict::inconclusive; }));
}

namespace {

CorpusRow run_entry(const CorpusEntry& entry, const DimensionConfig& config) {
    CorpusRow row;
    row.name = entry.name;
    row.n = entry.n;
    const auto start = std::chrono::steady_clock::now();
    try {
        const auto result = module_dimension(entry.ideal, config);
        row.d = result.d;
        row.multiplicity = multiplicity(result.fit);
        row.stabilized = result.fit.stabilized();
        const auto n = static_cast<std::int64_t>(entry.n);
        const auto d = result.d.value();
        if (d < n) {
            row.verdict = Verdict::fail;
            row.detail = "d < n";
        } else if (d > 2 * n) {
            row.verdict = Verdict::fail;
            row.detail = "d > 2n";
        } else if (entry.expected_d && *entry.expected_d != d) {
            row.verdict = Verdict::fail;
            row.detail = "expected d = " + std::to_string(*entry.expected_d);
        } else {
            row.verdict = Verdict::pass;
        }
    } catch (const ZeroModule& e) {
        row.verdict = Verdict::fail;
        row.detail = e.what();
    } catch (const Inconclusive& e) {
        row.verdict = Verdict::inconclusive;
        row.detail = e.what();
    }
    row.runtime_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return row;
}

} // namespace

CorpusReport bernstein_corpus(const std::vector<CorpusEntry>& corpus, const DimensionConfig& config, unsigned threads) {
    if (corpus.empty()) throw Error("empty corpus");
    CorpusReport report;
    report.rows.resize(corpus.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k = next++; k < corpus.size(); k = next++) report.rows[k] = run_entry(corpus[k], config);
    };
    const auto count = std::clamp<unsigned>(threads, 1, static_cast<unsigned>(corpus.size()));
    std::vector<std::jthread> pool;
    for (unsigned k = 1; k < count; ++k) pool.emplace_back(worker);
    worker();
    pool.clear();
    std::sort(report.rows.begin(), report.rows.end(), [](const auto& l, const auto& r) { return l.name < r.name; });
    return report;
}

nlohmann::json to_json(const CorpusReport& report) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& r : report.rows) {
        nlohmann::json row;
        row["name"] = r.name;
        row["n"] = r.n;
        if (r.d.is_neg_inf()) {
            row["d"] = nullptr;
        } else {
            row["d"] = r.d.value();
        }
        row["multiplicity"] = r.multiplicity ? nlohmann::json(r.multiplicity->get_str()) : nlohmann::json(nullptr);
        row["stabilized"] = r.stabilized;
        row["verdict"] = to_string(r.verdict);
        if (!r.detail.empty()) row["detail"] = r.detail;
        out.push_back(std::move(row));
    }
    return out;
}

std::string to_table(const CorpusReport& report) {
    std::vector<std::array<std::string, 7>> cells;
    cells.push_back({"name", "n", "d", "mult", "stabilized", "ms", "verdict"});
    for (const auto& r : report.rows) {
        std::ostringstream ms;
        ms << std::fixed << std::setprecision(1) << r.runtime_ms;
        cells.push_back({r.name, std::to_string(r.n), r.d.to_string(),
                         r.multiplicity ? r.multiplicity->get_str() : "-", r.stabilized ? "yes" : "no", ms.str(),
                         to_string(r.verdict) + (r.detail.empty() ? "" : " (" + r.detail + ")")});
    }
    std::array<std::size_t, 7> width{};
    for (const auto& row : cells) {
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    }
    // Numeric columns are right-aligned.
    constexpr std::array<bool, 7> right{false, true, true, true, false, true, false};
    std::ostringstream out;
    for (const auto& row : cells) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c > 0) out << "  ";
            out << (right[c] ? std::right : std::left) << std::setw(static_cast<int>(width[c])) << row[c];
        }
        out << '\n';
    }
    return out.str();
}

} // namespace weyl
