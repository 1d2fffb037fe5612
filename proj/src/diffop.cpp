#include "weyl/diffop.hpp"

#include "weyl/errors.hpp"

namespace weyl {

namespace {

template <class T>
void require_same(const T& p, const T& q) {
    if (p.vars() != q.vars()) throw DimensionMismatch(p.vars(), q.vars());
}

void check_shape(std::size_t n, const ExponentPair& e) {
    if (e.a.size() != n || e.b.size() != n) throw DimensionMismatch(n, e.a.size());
}

} // namespace

DiffOp::DiffOp(std::size_t n, Terms terms) : n_(n), terms_(std::move(terms)) {
    std::erase_if(terms_, [](const auto& kv) { return sgn(kv.second) == 0; });
    for (const auto& kv : terms_) check_shape(n_, kv.first);
}

DiffOp DiffOp::constant(std::size_t n, const Coefficient& c) {
    return monomial(ExponentPair(n), c);
}

DiffOp DiffOp::monomial(ExponentPair e, const Coefficient& c) {
    const auto n = e.vars();
    Terms t;
    accumulate(t, e, c);
    return DiffOp(n, std::move(t));
}

DiffOp DiffOp::x(std::size_t n, std::size_t i) {
    ExponentPair e(n);
    e.a.at(i) = 1;
    return monomial(std::move(e), 1);
}

DiffOp DiffOp::d(std::size_t n, std::size_t i) {
    ExponentPair e(n);
    e.b.at(i) = 1;
    return monomial(std::move(e), 1);
}

DiffOp DiffOp::from_polynomial(const Polynomial& f) {
    Terms t;
    for (const auto& [e, c] : f.terms()) t.emplace(ExponentPair(e, Exponents(f.vars(), 0)), c);
    return DiffOp(f.vars(), std::move(t));
}

Coefficient DiffOp::coefficient(const ExponentPair& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Coefficient(0) : it->second;
}

SymbolPoly::SymbolPoly(std::size_t n, Terms terms) : n_(n), terms_(std::move(terms)) {
    std::erase_if(terms_, [](const auto& kv) { return sgn(kv.second) == 0; });
    for (const auto& kv : terms_) check_shape(n_, kv.first);
}

DiffOp add(const DiffOp& p, const DiffOp& q) {
    require_same(p, q);
    auto terms = p.terms();
    for (const auto& [e, c] : q.terms()) accumulate(terms, e, c);
    return DiffOp(p.vars(), std::move(terms));
}

DiffOp sub(const DiffOp& p, const DiffOp& q) { return add(p, scale(q, -1)); }

DiffOp scale(const DiffOp& p, const Coefficient& c) {
    DiffOp::Terms terms;
    if (sgn(c) != 0) {
        for (const auto& [e, v] : p.terms()) terms.emplace(e, v * c);
    }
    return DiffOp(p.vars(), std::move(terms));
}

namespace {

// Adds coeff * (x^a d^b)(x^c d^e) into out.
void accumulate_product(DiffOp::Terms& out, const ExponentPair& lhs, const ExponentPair& rhs,
                        const Coefficient& coeff) {
    const std::size_t n = lhs.vars();
    // Only variables where both d_i (left) and x_i (right) occur produce extra terms.
    std::vector<std::size_t> mixed;
    for (std::size_t i = 0; i < n; ++i) {
        if (lhs.b[i] > 0 && rhs.a[i] > 0) mixed.push_back(i);
    }
    ExponentPair base(n);
    for (std::size_t i = 0; i < n; ++i) {
        base.a[i] = lhs.a[i] + rhs.a[i];
        base.b[i] = lhs.b[i] + rhs.b[i];
    }
    // k[j] is the number of contractions d_i x_i -> 1 for variable mixed[j].
    std::vector<std::uint32_t> k(mixed.size(), 0);
    ExponentPair cur = base;
    while (true) {
        mpz_class weight = 1;
        for (std::size_t j = 0; j < mixed.size(); ++j) {
            const auto i = mixed[j];
            weight *= binomial(lhs.b[i], k[j]) * falling_factorial(rhs.a[i], k[j]);
        }
        accumulate(out, cur, Coefficient(coeff * weight));

        std::size_t j = 0;
        for (; j < mixed.size(); ++j) {
            const auto i = mixed[j];
            if (k[j] < std::min(lhs.b[i], rhs.a[i])) {
                ++k[j];
                --cur.a[i];
                --cur.b[i];
                break;
            }
            cur.a[i] += k[j];
            cur.b[i] += k[j];
            k[j] = 0;
        }
        if (j == mixed.size()) break;
    }
}

} // namespace

DiffOp mul_monomials(const ExponentPair& lhs, const ExponentPair& rhs) {
    if (lhs.vars() != rhs.vars()) throw DimensionMismatch(lhs.vars(), rhs.vars());
    DiffOp::Terms out;
    accumulate_product(out, lhs, rhs, 1);
    return DiffOp(lhs.vars(), std::move(out));
}

DiffOp mul(const DiffOp& p, const DiffOp& q) {
    require_same(p, q);
    DiffOp::Terms out;
    for (const auto& [ep, cp] : p.terms()) {
        for (const auto& [eq, cq] : q.terms()) accumulate_product(out, ep, eq, Coefficient(cp * cq));
    }
    return DiffOp(p.vars(), std::move(out));
}

DiffOp pow(const DiffOp& p, std::uint32_t k) {
    auto result = DiffOp::constant(p.vars(), 1);
    for (std::uint32_t j = 0; j < k; ++j) result = mul(result, p);
    return result;
}

DiffOp commutator(const DiffOp& p, const DiffOp& q) { return sub(mul(p, q), mul(q, p)); }

Polynomial apply(const DiffOp& p, const Polynomial& f, Truncation trunc) {
    if (p.vars() != f.vars()) throw DimensionMismatch(p.vars(), f.vars());
    const auto n = p.vars();
    Polynomial::Terms out;
    Exponents e(n);
    for (const auto& [op, cp] : p.terms()) {
        for (const auto& [ef, cf] : f.terms()) {
            mpz_class weight = 1;
            bool vanishes = false;
            for (std::size_t i = 0; i < n && !vanishes; ++i) {
                if (ef[i] < op.b[i]) {
                    vanishes = true;
                    break;
                }
                weight *= falling_factorial(ef[i], op.b[i]);
                e[i] = ef[i] - op.b[i] + op.a[i];
            }
            if (vanishes) continue;
            if (trunc && total_degree(e) > *trunc) continue;
            accumulate(out, e, Coefficient(cp * cf * weight));
        }
    }
    return Polynomial(n, std::move(out));
}

Degree order_degree(const DiffOp& p) { return filtration_degree(p, Filtration::order); }

Degree bernstein_degree(const DiffOp& p) { return filtration_degree(p, Filtration::bernstein); }

namespace {

std::uint64_t term_degree(const ExponentPair& e, Filtration f) {
    return f == Filtration::order ? e.d_degree() : e.degree();
}

} // namespace

Degree filtration_degree(const DiffOp& p, Filtration f) {
    if (p.is_zero()) return Degree::neg_inf();
    std::uint64_t best = 0;
    for (const auto& kv : p.terms()) best = std::max(best, term_degree(kv.first, f));
    return Degree(static_cast<std::int64_t>(best));
}

SymbolPoly principal_symbol(const DiffOp& p, Filtration f) {
    if (p.is_zero()) throw UndefinedSymbol();
    const auto top = static_cast<std::uint64_t>(filtration_degree(p, f).value());
    SymbolPoly::Terms terms;
    for (const auto& [e, c] : p.terms()) {
        if (term_degree(e, f) == top) terms.emplace(e, c);
    }
    return SymbolPoly(p.vars(), std::move(terms));
}

SymbolPoly mul(const SymbolPoly& p, const SymbolPoly& q) {
    require_same(p, q);
    const auto n = p.vars();
    SymbolPoly::Terms out;
    ExponentPair e(n);
    for (const auto& [ep, cp] : p.terms()) {
        for (const auto& [eq, cq] : q.terms()) {
            for (std::size_t i = 0; i < n; ++i) {
                e.a[i] = ep.a[i] + eq.a[i];
                e.b[i] = ep.b[i] + eq.b[i];
            }
            accumulate(out, e, Coefficient(cp * cq));
        }
    }
    return SymbolPoly(n, std::move(out));
}

} // namespace weyl
