#include "reals/expr.hpp"

#include "reals/arith.hpp"
#include "reals/generators.hpp"

#include <cctype>
#include <vector>

namespace reals {

namespace {

struct Token {
    enum class Kind { Number, Name, Plus, Minus, Slash, LParen, RParen, Comma, End };
    Kind kind;
    std::string text;
    std::size_t pos;
};

std::vector<Token> tokenize(std::string_view src) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < src.size()) {
        char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            std::string text;
            bool dot = false;
            while (i < src.size() &&
                   (std::isdigit(static_cast<unsigned char>(src[i])) ||
                    (src[i] == '.' && !dot))) {
                dot = dot || src[i] == '.';
                text += src[i++];
            }
            if (text == ".") throw ParseError("expected digits around '.'", start);
            out.push_back({Token::Kind::Number, text, start});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string text;
            while (i < src.size() &&
                   std::isalpha(static_cast<unsigned char>(src[i])))
                text += src[i++];
            out.push_back({Token::Kind::Name, text, start});
            continue;
        }
        Token::Kind k;
        switch (c) {
            case '+': k = Token::Kind::Plus; break;
            case '-': k = Token::Kind::Minus; break;
            case '/': k = Token::Kind::Slash; break;
            case '(': k = Token::Kind::LParen; break;
            case ')': k = Token::Kind::RParen; break;
            case ',': k = Token::Kind::Comma; break;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", i);
        }
        out.push_back({k, std::string(1, c), i});
        ++i;
    }
    out.push_back({Token::Kind::End, "", src.size()});
    return out;
}

class Parser {
public:
    explicit Parser(std::string_view src) : toks_(tokenize(src)) {}

    ExprPtr run() {
        ExprPtr e = expr();
        expect(Token::Kind::End, "trailing input after expression");
        return e;
    }

private:
    const Token& peek() const { return toks_[i_]; }
    Token take() { return toks_[i_++]; }

    void expect(Token::Kind k, const std::string& what) {
        if (peek().kind != k) throw ParseError(what, peek().pos);
        take();
    }

    ExprPtr expr() {
        ExprPtr lhs = term();
        while (peek().kind == Token::Kind::Plus || peek().kind == Token::Kind::Minus) {
            bool add = take().kind == Token::Kind::Plus;
            ExprPtr rhs = term();
            auto node = std::make_shared<Expression>();
            node->kind = add ? Expression::Kind::Add : Expression::Kind::Sub;
            node->lhs = lhs;
            node->rhs = rhs;
            lhs = node;
        }
        return lhs;
    }

    ExprPtr term() {
        if (peek().kind == Token::Kind::Minus) {
            std::size_t pos = take().pos;
            (void)pos;
            auto node = std::make_shared<Expression>();
            node->kind = Expression::Kind::Neg;
            node->lhs = term();
            return node;
        }
        return primary();
    }

    ExprPtr primary() {
        const Token& t = peek();
        switch (t.kind) {
            case Token::Kind::Number: return number();
            case Token::Kind::Name: return named();
            case Token::Kind::LParen: {
                take();
                ExprPtr inner = expr();
                expect(Token::Kind::RParen, "expected ')'");
                return inner;
            }
            default:
                throw ParseError("expected a number, name, or '('", t.pos);
        }
    }

    ExprPtr number() {
        Token first = take();
        auto node = std::make_shared<Expression>();
        node->kind = Expression::Kind::Literal;
        // "a / b" with two integer parts reads as one exact fraction;
        // the grammar has no division, so the slash is unambiguous
        if (peek().kind == Token::Kind::Slash) {
            if (first.text.find('.') != std::string::npos)
                throw ParseError("fraction parts must be integers", first.pos);
            take();
            if (peek().kind != Token::Kind::Number ||
                peek().text.find('.') != std::string::npos)
                throw ParseError("expected an integer denominator", peek().pos);
            Token den = take();
            if (Int(den.text) == 0) throw ParseError("zero denominator", den.pos);
            node->literal = Rational(Int(first.text), Int(den.text));
        } else {
            node->literal = Rational::from_string(first.text);
        }
        return node;
    }

    std::vector<ExprPtr> args() {
        expect(Token::Kind::LParen, "expected '('");
        std::vector<ExprPtr> out;
        if (peek().kind != Token::Kind::RParen) {
            out.push_back(expr());
            while (peek().kind == Token::Kind::Comma) {
                take();
                out.push_back(expr());
            }
        }
        expect(Token::Kind::RParen, "expected ')'");
        return out;
    }

    ExprPtr named() {
        Token t = take();
        auto node = std::make_shared<Expression>();
        if (t.text == "abs" || t.text == "mid") {
            auto a = args();
            if (t.text == "abs") {
                if (a.size() != 1) throw ParseError("abs takes one argument", t.pos);
                node->kind = Expression::Kind::Abs;
                node->lhs = a[0];
            } else {
                if (a.size() != 2) throw ParseError("mid takes two arguments", t.pos);
                node->kind = Expression::Kind::Mid;
                node->lhs = a[0];
                node->rhs = a[1];
            }
            return node;
        }
        if (t.text == "geo") {
            auto a = args();
            if (a.size() != 1) throw ParseError("geo takes one argument", t.pos);
            auto q = const_fold(*a[0]);
            if (!q) throw ParseError("geo needs a rational argument", t.pos);
            node->kind = Expression::Kind::Builtin;
            node->name = "geo";
            node->param = *q;
            return node;
        }
        if (t.text == "bigmid") {
            expect(Token::Kind::LParen, "expected '('");
            if (peek().kind != Token::Kind::Name)
                throw ParseError("bigmid takes a sequence name: unit or alt", peek().pos);
            Token seq = take();
            if (seq.text != "unit" && seq.text != "alt")
                throw ParseError("unknown sequence '" + seq.text + "' (use unit or alt)",
                                 seq.pos);
            expect(Token::Kind::RParen, "expected ')'");
            node->kind = Expression::Kind::BigMid;
            node->name = seq.text;
            return node;
        }
        if (t.text == "third" || t.text == "quarter") {
            node->kind = Expression::Kind::Builtin;
            node->name = t.text;
            return node;
        }
        throw ParseError("unknown name '" + t.text + "'", t.pos);
    }

    static std::optional<Rational> const_fold(const Expression& e) {
        switch (e.kind) {
            case Expression::Kind::Literal: return e.literal;
            case Expression::Kind::Neg: {
                auto a = const_fold(*e.lhs);
                return a ? std::optional<Rational>(-*a) : std::nullopt;
            }
            case Expression::Kind::Abs: {
                auto a = const_fold(*e.lhs);
                return a ? std::optional<Rational>(abs(*a)) : std::nullopt;
            }
            case Expression::Kind::Add:
            case Expression::Kind::Sub:
            case Expression::Kind::Mid: {
                auto a = const_fold(*e.lhs), b = const_fold(*e.rhs);
                if (!a || !b) return std::nullopt;
                if (e.kind == Expression::Kind::Add) return *a + *b;
                if (e.kind == Expression::Kind::Sub) return *a - *b;
                return (*a + *b) / 2;
            }
            default: return std::nullopt;
        }
    }

    std::vector<Token> toks_;
    std::size_t i_ = 0;
};

}  // namespace

ExprPtr parse_expression(std::string_view text) { return Parser(text).run(); }

Real evaluate(const Expression& e) {
    switch (e.kind) {
        case Expression::Kind::Literal: return rat(e.literal);
        case Expression::Kind::Add: return evaluate(*e.lhs) + evaluate(*e.rhs);
        case Expression::Kind::Sub: return evaluate(*e.lhs) - evaluate(*e.rhs);
        case Expression::Kind::Neg: return -evaluate(*e.lhs);
        case Expression::Kind::Abs: return abs(evaluate(*e.lhs));
        case Expression::Kind::Mid: return midpoint(evaluate(*e.lhs), evaluate(*e.rhs));
        case Expression::Kind::BigMid: {
            if (e.name == "unit")
                return big_midpoint(
                    [](unsigned i) { return rat(Rational(i == 0 ? 1 : 0)); },
                    PositiveRational::one());
            return big_midpoint(
                [](unsigned i) { return rat(Rational(i % 2 == 0 ? 1 : -1)); },
                PositiveRational::one());
        }
        case Expression::Kind::Builtin: {
            if (e.name == "third") return lim(truncation_family(Rational(1, 3)).family);
            if (e.name == "quarter") return lim(truncation_family(Rational(1, 4)).family);
            // geo
            return lim(geometric_family(*e.param).family);
        }
    }
    throw std::logic_error("evaluate: unhandled node");
}

unsigned digits_to_precision(unsigned digits) {
    // smallest n with 2^n > 10^digits
    Int pow10(1);
    for (unsigned i = 0; i < digits; ++i) pow10 *= 10;
    unsigned n = 0;
    Int pow2(1);
    while (pow2 <= pow10) {
        pow2 <<= 1;
        ++n;
    }
    return n;
}

std::string eval_decimal(const Real& u, unsigned digits) {
    Bounds b = rational_bounds(u, digits_to_precision(digits));
    Rational mid = (b.lower + b.upper) / 2;
    // |printed - u| <= 10^-(digits+1)/2 + width/2 < 10^-digits
    return mid.to_decimal(digits + 1);
}

}  // namespace reals
