#pragma once

// Reference implementations that share no code with the library beyond the
// term containers. They are slow on purpose.

#include "weyl/diffop.hpp"

#include <functional>
#include <vector>

namespace oracle {

using weyl::Coefficient;
using weyl::DiffOp;
using weyl::ExponentPair;

// A letter is x_i (derivation = false) or d_i.
struct Letter {
    bool derivation;
    std::size_t index;
};
using Word = std::vector<Letter>;

inline int letter_key(const Letter& l, std::size_t n) {
    return static_cast<int>(l.derivation ? n + l.index : l.index);
}

// Normal form of a word by bubble-sorting letters, rewriting d_i x_i -> x_i d_i + 1.
inline void normalize_word(const Word& w, const Coefficient& c, std::size_t n, DiffOp::Terms& out) {
    for (std::size_t k = 0; k + 1 < w.size(); ++k) {
        if (letter_key(w[k], n) <= letter_key(w[k + 1], n)) continue;
        Word swapped = w;
        std::swap(swapped[k], swapped[k + 1]);
        normalize_word(swapped, c, n, out);
        if (w[k].derivation && !w[k + 1].derivation && w[k].index == w[k + 1].index) {
            Word dropped;
            for (std::size_t j = 0; j < w.size(); ++j) {
                if (j != k && j != k + 1) dropped.push_back(w[j]);
            }
            normalize_word(dropped, c, n, out);
        }
        return;
    }
    ExponentPair e(n);
    for (const auto& l : w) ++(l.derivation ? e.b : e.a)[l.index];
    weyl::accumulate(out, e, c);
}

inline Word word_of(const ExponentPair& e) {
    Word w;
    for (std::size_t i = 0; i < e.vars(); ++i) {
        for (std::uint32_t k = 0; k < e.a[i]; ++k) w.push_back({false, i});
    }
    for (std::size_t i = 0; i < e.vars(); ++i) {
        for (std::uint32_t k = 0; k < e.b[i]; ++k) w.push_back({true, i});
    }
    return w;
}

inline DiffOp mul(const DiffOp& p, const DiffOp& q) {
    const auto n = p.vars();
    DiffOp::Terms out;
    for (const auto& [ep, cp] : p.terms()) {
        for (const auto& [eq, cq] : q.terms()) {
            auto w = word_of(ep);
            const auto tail = word_of(eq);
            w.insert(w.end(), tail.begin(), tail.end());
            normalize_word(w, cp * cq, n, out);
        }
    }
    return DiffOp(n, std::move(out));
}

// d^b x^c as a polynomial: prod_i c_i!/(c_i-b_i)! x^{c-b}, or zero.
inline weyl::Polynomial apply_monomial(const ExponentPair& op, const weyl::Exponents& c) {
    const auto n = op.vars();
    Coefficient coef = 1;
    weyl::Exponents e(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (op.b[i] > c[i]) return weyl::Polynomial(n);
        for (std::uint32_t k = 0; k < op.b[i]; ++k) coef *= c[i] - k;
        e[i] = c[i] - op.b[i] + op.a[i];
    }
    return weyl::Polynomial::monomial(e, coef);
}

// Every exponent vector of length m with total <= t.
inline void for_each_exponent(std::size_t m, std::uint32_t t, const std::function<void(const weyl::Exponents&)>& f) {
    weyl::Exponents cur(m, 0);
    std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t pos, std::uint32_t left) {
        if (pos == m) {
            f(cur);
            return;
        }
        for (std::uint32_t v = 0; v <= left; ++v) {
            cur[pos] = v;
            rec(pos + 1, left - v);
        }
        cur[pos] = 0;
    };
    rec(0, t);
}

inline std::size_t count_monomials(std::size_t m, std::uint32_t t) {
    std::size_t count = 0;
    for_each_exponent(m, t, [&](const weyl::Exponents&) { ++count; });
    return count;
}

// Hilbert function of D/(letters) when the ideal is generated by single letters:
// standard monomials avoid every generating letter.
inline std::size_t staircase(std::size_t n, const std::vector<Letter>& gens, std::uint32_t t) {
    std::vector<bool> blocked(2 * n, false);
    for (const auto& g : gens) blocked[letter_key(g, n)] = true;
    std::size_t free = 0;
    for (bool b : blocked) free += b ? 0 : 1;
    return count_monomials(free, t);
}

inline Coefficient choose(std::int64_t top, std::int64_t k) {
    if (top < k || k < 0 || top < 0) return 0;
    Coefficient r = 1;
    for (std::int64_t j = 0; j < k; ++j) r = r * (top - j) / (j + 1);
    return r;
}

// D/Dg with g of Bernstein degree e: gr is k[x, xi]/(sigma(g)).
inline Coefficient principal(std::size_t n, std::uint32_t e, std::uint32_t t) {
    const auto m = static_cast<std::int64_t>(2 * n);
    return choose(t + m, m) - choose(static_cast<std::int64_t>(t) - e + m, m);
}

} // namespace oracle
