#include "weyl/parser.hpp"

#include "weyl/errors.hpp"

#include <cctype>
#include <limits>

namespace weyl {

namespace {

enum class Tok { number, var, plus, minus, star, caret, lparen, rparen, comma, end };

struct Token {
    Tok kind = Tok::end;
    std::size_t offset = 0;
    std::string text;       // digits of a number (and "/den" part), or the var letter
    bool has_denominator = false;
    std::size_t index = 0;  // variable index
};

class Parser {
public:
    Parser(std::string_view text, bool allow_commas) : text_(text), allow_commas_(allow_commas) { advance(); }

    AstPtr expression() {
        auto start = tok_.offset;
        AstNode::Sum sum;
        sum.negated.push_back(false);
        sum.terms.push_back(term());
        while (tok_.kind == Tok::plus || tok_.kind == Tok::minus) {
            sum.negated.push_back(tok_.kind == Tok::minus);
            advance();
            sum.terms.push_back(term());
        }
        if (sum.terms.size() == 1 && !sum.negated.front()) return std::move(sum.terms.front());
        return make(std::move(sum), start);
    }

    bool at(Tok k) const { return tok_.kind == k; }
    void expect(Tok k, const char* what) {
        if (tok_.kind != k) fail(std::string("expected ") + what);
        advance();
    }
    [[noreturn]] void fail(const std::string& what) const { fail_at(what, tok_.offset); }

private:
    AstPtr term() {
        auto start = tok_.offset;
        AstNode::Product prod;
        prod.negated = false;
        if (tok_.kind == Tok::minus) {
            prod.negated = true;
            advance();
        }
        prod.factors.push_back(factor());
        while (tok_.kind == Tok::star) {
            advance();
            prod.factors.push_back(factor());
        }
        if (prod.factors.size() == 1 && !prod.negated) return std::move(prod.factors.front());
        return make(std::move(prod), start);
    }

    AstPtr factor() {
        auto start = tok_.offset;
        auto base = atom();
        if (tok_.kind != Tok::caret) return base;
        advance();
        if (tok_.kind == Tok::minus) fail("negative exponent");
        if (tok_.kind != Tok::number) fail("expected a non-negative integer exponent");
        if (tok_.has_denominator) fail("non-integer exponent");
        mpz_class e(tok_.text);
        if (e > std::numeric_limits<std::uint32_t>::max()) fail("exponent too large");
        auto exponent = static_cast<std::uint32_t>(e.get_ui());
        advance();
        if (tok_.kind == Tok::caret) fail("chained exponent; use parentheses");
        return make(AstNode::Power{std::move(base), exponent}, start);
    }

    AstPtr atom() {
        auto start = tok_.offset;
        switch (tok_.kind) {
        case Tok::number: {
            mpq_class value;
            if (tok_.has_denominator && mpz_class(tok_.text.substr(tok_.text.find('/') + 1)) == 0) {
                fail("zero denominator");
            }
            if (value.set_str(tok_.text, 10) != 0) fail("malformed number");
            value.canonicalize();
            advance();
            return make(AstNode::Literal{value}, start);
        }
        case Tok::var: {
            AstNode::Variable v{tok_.text == "d", tok_.index};
            advance();
            return make(v, start);
        }
        case Tok::lparen: {
            advance();
            auto inner = expression();
            expect(Tok::rparen, "')'");
            return make(AstNode::Group{std::move(inner)}, start);
        }
        default:
            fail("expected a number, a variable or '('");
        }
    }

    template <class Node>
    AstPtr make(Node node, std::size_t offset) const {
        auto p = std::make_unique<AstNode>();
        p->node = std::move(node);
        auto [line, col] = position(offset);
        p->line = line;
        p->column = col;
        return p;
    }

    std::pair<std::size_t, std::size_t> position(std::size_t offset) const {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i < offset && i < text_.size(); ++i) {
            if (text_[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        return {line, col};
    }

    [[noreturn]] void fail_at(const std::string& what, std::size_t offset) const {
        auto [line, col] = position(offset);
        throw ParseError(what, line, col);
    }

    std::string digits() {
        std::string s;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) s += text_[pos_++];
        return s;
    }

    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        tok_ = Token{};
        tok_.offset = pos_;
        if (pos_ >= text_.size()) {
            tok_.kind = Tok::end;
            return;
        }
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            tok_.kind = Tok::number;
            tok_.text = digits();
            if (pos_ < text_.size() && text_[pos_] == '/') {
                ++pos_;
                auto den = digits();
                if (den.empty()) fail_at("expected denominator digits directly after '/'", pos_);
                tok_.text += "/" + den;
                tok_.has_denominator = true;
            }
            return;
        }
        if (c == 'x' || c == 'd') {
            ++pos_;
            auto idx = digits();
            if (idx.empty()) fail_at("expected variable index after '" + std::string(1, c) + "'", tok_.offset);
            mpz_class v(idx);
            if (v == 0) fail_at("variable indices start at 1", tok_.offset);
            if (v > 1'000'000) fail_at("variable index out of range", tok_.offset);
            tok_.kind = Tok::var;
            tok_.text = std::string(1, c);
            tok_.index = v.get_ui();
            return;
        }
        ++pos_;
        switch (c) {
        case '+': tok_.kind = Tok::plus; return;
        case '-': tok_.kind = Tok::minus; return;
        case '*': tok_.kind = Tok::star; return;
        case '^': tok_.kind = Tok::caret; return;
        case '(': tok_.kind = Tok::lparen; return;
        case ')': tok_.kind = Tok::rparen; return;
        case ',':
            if (allow_commas_) {
                tok_.kind = Tok::comma;
                return;
            }
            break;
        default: break;
        }
        fail_at(std::string("unexpected character '") + c + "'", tok_.offset);
    }

    std::string_view text_;
    bool allow_commas_;
    std::size_t pos_ = 0;
    Token tok_;
};

struct Evaluator {
    std::size_t n;

    DiffOp operator()(const AstNode& node) const {
        return std::visit([&](const auto& v) { return eval(v, node); }, node.node);
    }

    DiffOp eval(const AstNode::Literal& lit, const AstNode&) const { return DiffOp::constant(n, lit.value); }

    DiffOp eval(const AstNode::Variable& v, const AstNode& node) const {
        if (v.index > n) {
            throw ParseError("variable index " + std::to_string(v.index) + " out of range for n=" + std::to_string(n),
                             node.line, node.column);
        }
        return v.derivation ? DiffOp::d(n, v.index - 1) : DiffOp::x(n, v.index - 1);
    }

    DiffOp eval(const AstNode::Sum& s, const AstNode&) const {
        DiffOp acc(n);
        for (std::size_t i = 0; i < s.terms.size(); ++i) {
            auto t = (*this)(*s.terms[i]);
            acc = s.negated[i] ? sub(acc, t) : add(acc, t);
        }
        return acc;
    }

    DiffOp eval(const AstNode::Product& p, const AstNode&) const {
        auto acc = (*this)(*p.factors.front());
        for (std::size_t i = 1; i < p.factors.size(); ++i) acc = mul(acc, (*this)(*p.factors[i]));
        return p.negated ? scale(acc, -1) : acc;
    }

    DiffOp eval(const AstNode::Power& p, const AstNode&) const { return pow((*this)(*p.base), p.exponent); }

    DiffOp eval(const AstNode::Group& g, const AstNode&) const { return (*this)(*g.inner); }
};

std::string factor_string(char letter, std::size_t index, std::uint32_t power) {
    std::string s(1, letter);
    s += std::to_string(index + 1);
    if (power > 1) s += "^" + std::to_string(power);
    return s;
}

std::string monomial_string(const Exponents& a, const Exponents* b, const char* b_letter) {
    std::string s;
    auto append = [&](const std::string& f) {
        if (!s.empty()) s += '*';
        s += f;
    };
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > 0) append(factor_string('x', i, a[i]));
    }
    if (b != nullptr) {
        for (std::size_t i = 0; i < b->size(); ++i) {
            if ((*b)[i] == 0) continue;
            std::string f = b_letter + std::to_string(i + 1);
            if ((*b)[i] > 1) f += "^" + std::to_string((*b)[i]);
            append(f);
        }
    }
    return s;
}

template <class Terms, class MonoFn>
std::string render(const Terms& terms, MonoFn mono) {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms) {
        const bool negative = sgn(c) < 0;
        if (first) {
            if (negative) out += '-';
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        const Coefficient mag = abs(c);
        const std::string m = mono(e);
        if (m.empty()) {
            out += mag.get_str();
        } else if (mag == 1) {
            out += m;
        } else {
            out += mag.get_str() + "*" + m;
        }
    }
    return out;
}

} // namespace

AstPtr parse_ast(std::string_view text) {
    Parser p(text, false);
    auto ast = p.expression();
    if (!p.at(Tok::end)) p.fail("unexpected trailing input");
    return ast;
}

DiffOp evaluate(const AstNode& ast, std::size_t n) { return Evaluator{n}(ast); }

DiffOp parse(std::string_view text, std::size_t n) { return evaluate(*parse_ast(text), n); }

Polynomial parse_polynomial(std::string_view text, std::size_t n) {
    auto op = parse(text, n);
    Polynomial::Terms terms;
    for (const auto& [e, c] : op.terms()) {
        if (e.d_degree() != 0) throw ParseError("expected a polynomial in x only", 1, 1);
        terms.emplace(e.a, c);
    }
    return Polynomial(n, std::move(terms));
}

std::vector<DiffOp> parse_list(std::string_view text, std::size_t n) {
    std::vector<DiffOp> out;
    if (text.find_first_not_of(" \t\r\n") == std::string_view::npos) return out;
    Parser p(text, true);
    while (true) {
        out.push_back(evaluate(*p.expression(), n));
        if (p.at(Tok::end)) break;
        p.expect(Tok::comma, "',' or end of input");
    }
    return out;
}

std::string print(const DiffOp& p) {
    return render(p.terms(), [](const ExponentPair& e) { return monomial_string(e.a, &e.b, "d"); });
}

std::string print(const Polynomial& f) {
    return render(f.terms(), [](const Exponents& e) { return monomial_string(e, nullptr, ""); });
}

std::string print(const SymbolPoly& s) {
    return render(s.terms(), [](const ExponentPair& e) { return monomial_string(e.a, &e.b, "xi"); });
}

} // namespace weyl
