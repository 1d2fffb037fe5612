#include "weyl/polynomial.hpp"

#include "weyl/errors.hpp"

namespace weyl {

namespace {

void require_same(const Polynomial& p, const Polynomial& q) {
    if (p.vars() != q.vars()) throw DimensionMismatch(p.vars(), q.vars());
}

bool within(const Exponents& e, Truncation trunc) { return !trunc || total_degree(e) <= *trunc; }

} // namespace

Polynomial::Polynomial(std::size_t n, Terms terms) : n_(n), terms_(std::move(terms)) {
    std::erase_if(terms_, [](const auto& kv) { return sgn(kv.second) == 0; });
    for (const auto& [e, c] : terms_) {
        if (e.size() != n_) throw DimensionMismatch(n_, e.size());
    }
}

Polynomial Polynomial::constant(std::size_t n, const Coefficient& c) {
    Terms t;
    accumulate(t, Exponents(n, 0), c);
    return Polynomial(n, std::move(t));
}

Polynomial Polynomial::variable(std::size_t n, std::size_t i) {
    Exponents e(n, 0);
    e.at(i) = 1;
    return monomial(std::move(e), 1);
}

Polynomial Polynomial::monomial(Exponents e, const Coefficient& c) {
    const auto n = e.size();
    Terms t;
    accumulate(t, e, c);
    return Polynomial(n, std::move(t));
}

Degree Polynomial::degree() const {
    if (terms_.empty()) return Degree::neg_inf();
    return Degree(static_cast<std::int64_t>(total_degree(terms_.begin()->first)));
}

Coefficient Polynomial::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Coefficient(0) : it->second;
}

Polynomial add(const Polynomial& p, const Polynomial& q) {
    require_same(p, q);
    auto terms = p.terms();
    for (const auto& [e, c] : q.terms()) accumulate(terms, e, c);
    return Polynomial(p.vars(), std::move(terms));
}

Polynomial sub(const Polynomial& p, const Polynomial& q) { return add(p, scale(q, -1)); }

Polynomial scale(const Polynomial& p, const Coefficient& c) {
    Polynomial::Terms terms;
    if (sgn(c) != 0) {
        for (const auto& [e, v] : p.terms()) terms.emplace(e, v * c);
    }
    return Polynomial(p.vars(), std::move(terms));
}

Polynomial mul(const Polynomial& p, const Polynomial& q, Truncation trunc) {
    require_same(p, q);
    Polynomial::Terms terms;
    Exponents e(p.vars());
    for (const auto& [ep, cp] : p.terms()) {
        for (const auto& [eq, cq] : q.terms()) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ep[i] + eq[i];
            if (within(e, trunc)) accumulate(terms, e, Coefficient(cp * cq));
        }
    }
    return Polynomial(p.vars(), std::move(terms));
}

Polynomial pow(const Polynomial& p, std::uint32_t k, Truncation trunc) {
    auto result = truncate(Polynomial::constant(p.vars(), 1), trunc);
    for (std::uint32_t j = 0; j < k; ++j) result = mul(result, p, trunc);
    return result;
}

Polynomial derivative(const Polynomial& p, std::size_t i) {
    if (i >= p.vars()) throw Error("derivative index out of range");
    Polynomial::Terms terms;
    for (const auto& [e, c] : p.terms()) {
        if (e[i] == 0) continue;
        auto f = e;
        --f[i];
        accumulate(terms, f, Coefficient(c * e[i]));
    }
    return Polynomial(p.vars(), std::move(terms));
}

Polynomial truncate(const Polynomial& p, Truncation trunc) {
    if (!trunc) return p;
    Polynomial::Terms terms;
    for (const auto& [e, c] : p.terms()) {
        if (within(e, trunc)) terms.emplace(e, c);
    }
    return Polynomial(p.vars(), std::move(terms));
}

} // namespace weyl
