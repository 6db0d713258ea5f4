#include "composita/gfexpr.hpp"

#include <cctype>
#include <optional>
#include <utility>

#include "composita/composita.hpp"

namespace composita {

namespace {

enum class Tok { number, ident, plus, minus, star, slash, caret, lparen, rparen, end };

struct Token {
    Tok kind;
    std::string text;
    std::size_t begin;  // 1-based
    std::size_t end;    // one past the last character
};

std::vector<Token> tokenize(std::string_view src) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < src.size()) {
        const auto c = static_cast<unsigned char>(src[i]);
        if (std::isspace(c) != 0) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        if (std::isdigit(c) != 0) {
            while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i])) != 0) ++i;
            out.push_back({Tok::number, std::string(src.substr(start, i - start)), start + 1, i + 1});
            continue;
        }
        if (std::isalpha(c) != 0 || c == '_') {
            while (i < src.size() && (std::isalnum(static_cast<unsigned char>(src[i])) != 0 || src[i] == '_')) ++i;
            out.push_back({Tok::ident, std::string(src.substr(start, i - start)), start + 1, i + 1});
            continue;
        }
        Tok kind{};
        switch (c) {
            case '+': kind = Tok::plus; break;
            case '-': kind = Tok::minus; break;
            case '*': kind = Tok::star; break;
            case '/': kind = Tok::slash; break;
            case '^': kind = Tok::caret; break;
            case '(': kind = Tok::lparen; break;
            case ')': kind = Tok::rparen; break;
            default: throw ParseError(std::string("unexpected character '") + src[i] + "'", start + 1);
        }
        ++i;
        out.push_back({kind, std::string(1, static_cast<char>(c)), start + 1, i + 1});
    }
    out.push_back({Tok::end, "", src.size() + 1, src.size() + 1});
    return out;
}

GfAst make(GfKind kind, SourceSpan span, std::vector<GfAst> children = {}) {
    auto node = std::make_shared<GfNode>();
    node->kind = kind;
    node->span = span;
    node->children = std::move(children);
    return node;
}

std::optional<GfExponent> fold_affine(const GfNode& node) {
    const auto kids = [&](std::size_t i) { return fold_affine(*node.children[i]); };
    switch (node.kind) {
        case GfKind::constant: return GfExponent{node.value, 0};
        case GfKind::var_x: return GfExponent{0, 1};
        case GfKind::neg: {
            auto a = kids(0);
            if (!a) return std::nullopt;
            return GfExponent{-a->c0, -a->c1};
        }
        case GfKind::add:
        case GfKind::sub: {
            auto a = kids(0);
            auto b = kids(1);
            if (!a || !b) return std::nullopt;
            if (node.kind == GfKind::sub) return GfExponent{a->c0 - b->c0, a->c1 - b->c1};
            return GfExponent{a->c0 + b->c0, a->c1 + b->c1};
        }
        case GfKind::mul: {
            auto a = kids(0);
            auto b = kids(1);
            if (!a || !b) return std::nullopt;
            if (!a->c1.is_zero() && !b->c1.is_zero()) return std::nullopt;
            return GfExponent{a->c0 * b->c0, a->c0 * b->c1 + a->c1 * b->c0};
        }
        case GfKind::div: {
            auto a = kids(0);
            auto b = kids(1);
            if (!a || !b || !b->c1.is_zero() || b->c0.is_zero()) return std::nullopt;
            return GfExponent{a->c0 / b->c0, a->c1 / b->c0};
        }
        case GfKind::pow: {
            auto a = kids(0);
            if (!a || !a->c1.is_zero() || !node.exponent.is_integer()) return std::nullopt;
            const long e = node.exponent.c0.numerator().get_si();
            if (a->c0.is_zero() && e < 0) return std::nullopt;
            return GfExponent{a->c0.pow(e), 0};
        }
        default: return std::nullopt;
    }
}

class Parser {
public:
    explicit Parser(std::string_view src) : tokens_(tokenize(src)) {}

    GfAst parse() {
        auto root = expr();
        if (peek().kind != Tok::end) unexpected();
        return root;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    const Token& take() { return tokens_[pos_++]; }
    std::size_t last_end() const { return tokens_[pos_ - 1].end; }

    [[noreturn]] void unexpected() const {
        const Token& t = peek();
        if (t.kind == Tok::end) throw ParseError("unexpected end of input", t.begin);
        throw ParseError("unexpected '" + t.text + "'", t.begin);
    }

    void expect(Tok kind) {
        if (peek().kind != kind) unexpected();
        ++pos_;
    }

    GfAst expr() {
        auto lhs = term();
        while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
            const GfKind kind = take().kind == Tok::plus ? GfKind::add : GfKind::sub;
            auto rhs = term();
            lhs = make(kind, {lhs->span.begin, rhs->span.end}, {lhs, rhs});
        }
        return lhs;
    }

    GfAst term() {
        auto lhs = factor();
        while (peek().kind == Tok::star || peek().kind == Tok::slash) {
            const GfKind kind = take().kind == Tok::star ? GfKind::mul : GfKind::div;
            auto rhs = factor();
            lhs = make(kind, {lhs->span.begin, rhs->span.end}, {lhs, rhs});
        }
        return lhs;
    }

    GfAst factor() {
        if (peek().kind == Tok::minus) {
            const std::size_t begin = take().begin;
            auto operand = factor();
            return make(GfKind::neg, {begin, operand->span.end}, {operand});
        }
        auto base = atom();
        if (peek().kind != Tok::caret) return base;
        ++pos_;
        const GfExponent e = exponent();
        auto node = std::make_shared<GfNode>();
        node->kind = GfKind::pow;
        node->exponent = e;
        node->span = {base->span.begin, last_end()};
        node->children = {base};
        return node;
    }

    GfExponent exponent() {
        const Token& start = peek();
        GfExponent e;
        if (start.kind == Tok::lparen) {
            ++pos_;
            auto inner = expr();
            expect(Tok::rparen);
            auto folded = fold_affine(*inner);
            if (!folded) throw ParseError("exponent must be affine in x with rational coefficients", start.begin);
            e = *folded;
        } else {
            bool negative = false;
            if (peek().kind == Tok::minus) {
                negative = true;
                ++pos_;
            }
            if (peek().kind != Tok::number) {
                throw ParseError("exponent must be an integer or a parenthesised expression", peek().begin);
            }
            e.c0 = Rational::parse(take().text);
            if (negative) e.c0 = -e.c0;
        }
        if (peek().kind != Tok::caret) return e;
        // right-associative: a^b^c = a^(b^c), with b^c folded to a constant
        const std::size_t caret = take().begin;
        const GfExponent outer = exponent();
        if (!e.c1.is_zero() || !outer.is_integer() || (e.c0.is_zero() && outer.c0.sign() < 0)) {
            throw ParseError("exponent of an exponent must fold to a rational constant", caret);
        }
        return GfExponent{e.c0.pow(outer.c0.numerator().get_si()), 0};
    }

    GfAst atom() {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::number: {
                ++pos_;
                auto node = std::make_shared<GfNode>();
                node->kind = GfKind::constant;
                node->value = Rational::parse(t.text);
                node->span = {t.begin, t.end};
                return node;
            }
            case Tok::lparen: {
                ++pos_;
                auto inner = expr();
                expect(Tok::rparen);
                return inner;
            }
            case Tok::ident: {
                ++pos_;
                if (t.text == "t") return make(GfKind::var_t, {t.begin, t.end});
                if (t.text == "x") return make(GfKind::var_x, {t.begin, t.end});
                GfKind kind{};
                if (t.text == "exp") {
                    kind = GfKind::exp;
                } else if (t.text == "log") {
                    kind = GfKind::log;
                } else if (t.text == "lambertw") {
                    kind = GfKind::lambertw;
                } else {
                    throw ParseError("unknown identifier '" + t.text + "'", t.begin);
                }
                expect(Tok::lparen);
                auto arg = expr();
                expect(Tok::rparen);
                return make(kind, {t.begin, last_end()}, {arg});
            }
            default: unexpected();
        }
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

int precedence(const GfNode& node) {
    switch (node.kind) {
        case GfKind::add:
        case GfKind::sub: return 1;
        case GfKind::mul:
        case GfKind::div: return 2;
        case GfKind::neg: return 3;
        case GfKind::pow: return 4;
        default: return 5;
    }
}

std::string wrap(const GfNode& node, bool parens) {
    return parens ? "(" + format_gf(node) + ")" : format_gf(node);
}

std::string format_exponent(const GfExponent& e) {
    if (e.is_integer() && e.c0.sign() >= 0) return e.c0.to_string();
    std::string out;
    if (!e.c1.is_zero()) {
        if (e.c1 == Rational(-1)) {
            out = "-x";
        } else if (e.c1.is_one()) {
            out = "x";
        } else {
            out = (e.c1.sign() < 0 ? "-" : "") + (e.c1.sign() < 0 ? -e.c1 : e.c1).to_string() + "*x";
        }
        if (!e.c0.is_zero()) out += (e.c0.sign() < 0 ? " - " : " + ") + (e.c0.sign() < 0 ? -e.c0 : e.c0).to_string();
    } else {
        out = e.c0.to_string();
    }
    return "(" + out + ")";
}

Series reciprocal_or_cancel(const GfNode& node, std::size_t order, const std::map<std::string, Rational>& bindings);

}  // namespace

bool gf_equal(const GfNode& a, const GfNode& b) {
    if (a.kind != b.kind || !(a.value == b.value) || !(a.exponent == b.exponent) ||
        a.children.size() != b.children.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.children.size(); ++i) {
        if (!gf_equal(*a.children[i], *b.children[i])) return false;
    }
    return true;
}

GfAst parse_gf(std::string_view source) { return Parser(source).parse(); }

std::string format_gf(const GfNode& node) {
    const int p = precedence(node);
    const auto child = [&](std::size_t i) -> const GfNode& { return *node.children[i]; };
    switch (node.kind) {
        case GfKind::constant: return node.value.to_string();
        case GfKind::var_t: return "t";
        case GfKind::var_x: return "x";
        case GfKind::add:
        case GfKind::sub:
        case GfKind::mul:
        case GfKind::div: {
            static constexpr const char* kOps[] = {" + ", " - ", "*", "/"};
            const auto op = kOps[static_cast<int>(node.kind) - static_cast<int>(GfKind::add)];
            return wrap(child(0), precedence(child(0)) < p) + op + wrap(child(1), precedence(child(1)) <= p);
        }
        case GfKind::neg: return "-" + wrap(child(0), precedence(child(0)) < p);
        case GfKind::pow: return wrap(child(0), precedence(child(0)) < 5) + "^" + format_exponent(node.exponent);
        case GfKind::exp: return "exp(" + format_gf(child(0)) + ")";
        case GfKind::log: return "log(" + format_gf(child(0)) + ")";
        case GfKind::lambertw: return "lambertw(" + format_gf(child(0)) + ")";
    }
    return {};
}

Series evaluate_gf(const GfNode& node, std::size_t order, const std::map<std::string, Rational>& bindings) {
    const auto arg = [&](std::size_t i) { return evaluate_gf(*node.children[i], order, bindings); };
    if (node.kind == GfKind::div) return reciprocal_or_cancel(node, order, bindings);

    switch (node.kind) {
        case GfKind::constant: return Series::constant(XPoly(node.value), order);
        case GfKind::var_t: return Series::t(order);
        case GfKind::var_x: {
            auto it = bindings.find("x");
            return Series::constant(it == bindings.end() ? XPoly::x() : XPoly(it->second), order);
        }
        case GfKind::neg: return -arg(0);
        case GfKind::add: return arg(0) + arg(1);
        case GfKind::sub: return arg(0) - arg(1);
        case GfKind::mul: return series_mul(arg(0), arg(1));
        default: break;
    }

    const Series operand = arg(0);
    try {
        switch (node.kind) {
            case GfKind::pow: {
                const GfExponent& e = node.exponent;
                if (e.is_integer()) return series_pow_int(operand, e.c0.numerator().get_si());
                XPoly power(std::vector<Rational>{e.c0, e.c1});
                auto it = bindings.find("x");
                if (it != bindings.end()) power = XPoly(e.c0 + e.c1 * it->second);
                return series_pow_xpoly(operand, power);
            }
            case GfKind::exp: return series_exp(operand);
            case GfKind::log: return series_log(operand);
            case GfKind::lambertw: {
                if (!operand.constant_term().is_zero()) throw DomainError("lambertw needs a zero constant term");
                return series_compose(closed_series(ClosedForm::lambert_w, {}, order), operand);
            }
            default: break;
        }
    } catch (const EvalError&) {
        throw;
    } catch (const std::exception& e) {
        throw EvalError(e.what(), node.span);
    }
    throw EvalError("unsupported node", node.span);
}

Series evaluate_gf(std::string_view source, std::size_t order, const std::map<std::string, Rational>& bindings) {
    return evaluate_gf(*parse_gf(source), order, bindings);
}

namespace {

Series reciprocal_or_cancel(const GfNode& node, std::size_t order, const std::map<std::string, Rational>& bindings) {
    const GfNode& num_node = *node.children[0];
    const GfNode& den_node = *node.children[1];
    Series den = evaluate_gf(den_node, order, bindings);

    std::optional<std::size_t> m = den.valuation();
    // a denominator that vanishes to the working order may still have a
    // low-order term further out
    for (std::size_t extra = order + 1; !m && extra <= order + 64; extra *= 2) {
        den = evaluate_gf(den_node, order + extra, bindings);
        m = den.valuation();
        if (m) den = den.truncate(order);
    }
    try {
        if (!m) throw DomainError("division by a series that vanishes to order " + std::to_string(order + 64));
        if (*m == 0) {
            const XPoly& c = den.constant_term();
            if (!c.is_constant()) throw DomainError("denominator has constant term " + c.to_string() + ", not a unit");
            return series_mul(evaluate_gf(num_node, order, bindings), series_reciprocal(den));
        }
        const Series num_ext = evaluate_gf(num_node, order + *m, bindings);
        const Series den_ext = evaluate_gf(den_node, order + *m, bindings);
        Series num_red = series_div_t_pow(num_ext, *m);
        Series den_red = series_div_t_pow(den_ext, *m);
        if (!den_red.constant_term().is_constant()) {
            throw DomainError("denominator has leading coefficient " + den_red.constant_term().to_string() +
                              ", not a unit");
        }
        return series_mul(num_red, series_reciprocal(den_red));
    } catch (const EvalError&) {
        throw;
    } catch (const std::exception& e) {
        throw EvalError(e.what(), node.span);
    }
}

}  // namespace

}  // namespace composita
