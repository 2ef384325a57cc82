#include "c235/parser.hpp"

#include <cctype>

namespace c235 {

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
    Tok kind;
    std::string text;
    int line;
    int column;
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) { advance(); }

    const Token& peek() const { return tok_; }

    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) bump();
        tok_ = {Tok::End, "", line_, col_};
        if (pos_ >= s_.size()) return;
        const char c = s_[pos_];
        tok_.line = line_;
        tok_.column = col_;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                tok_.text += s_[pos_];
                bump();
            }
            tok_.kind = Tok::Number;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
                tok_.text += s_[pos_];
                bump();
            }
            tok_.kind = Tok::Ident;
            return;
        }
        switch (c) {
            case '+': tok_.kind = Tok::Plus; break;
            case '-': tok_.kind = Tok::Minus; break;
            case '*': tok_.kind = Tok::Star; break;
            case '/': tok_.kind = Tok::Slash; break;
            case '^': tok_.kind = Tok::Caret; break;
            case '(': tok_.kind = Tok::LParen; break;
            case ')': tok_.kind = Tok::RParen; break;
            default:
                throw ParseError(line_, col_, std::string("unexpected character '") + c + "'");
        }
        tok_.text = c;
        bump();
    }

    void bump() {
        if (s_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    const std::string& s_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
    Token tok_{Tok::End, "", 1, 1};
};

class Parser {
public:
    Parser(const std::string& text, const std::vector<std::string>& variables)
        : lex_(text), vars_(variables) {}

    Polynomial parse() {
        Polynomial p = expr();
        const Token& t = lex_.peek();
        if (t.kind != Tok::End)
            throw ParseError(t.line, t.column,
                             "unexpected '" + t.text + "' (implicit multiplication is not supported)");
        return p;
    }

private:
    Polynomial expr() {
        bool negate = false;
        if (lex_.peek().kind == Tok::Minus) {
            lex_.take();
            negate = true;
        }
        Polynomial acc = term();
        if (negate) acc = -acc;
        while (lex_.peek().kind == Tok::Plus || lex_.peek().kind == Tok::Minus) {
            const Token op = lex_.take();
            const Polynomial rhs = term();
            acc = op.kind == Tok::Plus ? acc + rhs : acc - rhs;
        }
        return acc;
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (lex_.peek().kind == Tok::Star) {
            lex_.take();
            acc = acc * factor();
        }
        return acc;
    }

    Polynomial factor() {
        Polynomial b = base();
        if (lex_.peek().kind != Tok::Caret) return b;
        lex_.take();
        const Token e = lex_.peek();
        if (e.kind == Tok::Minus)
            throw ParseError(e.line, e.column, "negative exponent");
        if (e.kind != Tok::Number)
            throw ParseError(e.line, e.column, "expected unsigned integer exponent");
        lex_.take();
        const unsigned long exp = std::stoul(e.text);
        if (exp > 1000) throw ParseError(e.line, e.column, "exponent too large");
        Polynomial out = Polynomial::constant(vars_, 1);
        for (unsigned long i = 0; i < exp; ++i) out = out * b;
        return out;
    }

    Polynomial base() {
        const Token t = lex_.peek();
        switch (t.kind) {
            case Tok::Number:
                lex_.take();
                return Polynomial::constant(vars_, rational_literal(t.text));
            case Tok::Minus: {
                // signed rational literal, e.g. the -3 in "x * -3"
                lex_.take();
                const Token n = lex_.peek();
                if (n.kind != Tok::Number)
                    throw ParseError(n.line, n.column, "expected number after '-'");
                lex_.take();
                return Polynomial::constant(vars_, -rational_literal(n.text));
            }
            case Tok::Ident: {
                lex_.take();
                for (const auto& v : vars_)
                    if (v == t.text) return Polynomial::variable(vars_, t.text);
                throw ParseError(t.line, t.column, "unknown identifier '" + t.text + "'");
            }
            case Tok::LParen: {
                lex_.take();
                Polynomial p = expr();
                const Token close = lex_.peek();
                if (close.kind != Tok::RParen)
                    throw ParseError(close.line, close.column, "expected ')'");
                lex_.take();
                return p;
            }
            default:
                throw ParseError(t.line, t.column,
                                 t.kind == Tok::End ? "unexpected end of expression"
                                                    : "unexpected '" + t.text + "'");
        }
    }

    Rational rational_literal(const std::string& numerator) {
        if (lex_.peek().kind != Tok::Slash) return rat_from_string(numerator);
        lex_.take();
        const Token d = lex_.peek();
        if (d.kind != Tok::Number)
            throw ParseError(d.line, d.column, "expected unsigned integer denominator");
        lex_.take();
        if (rat_from_string(d.text) == 0)
            throw ParseError(d.line, d.column, "zero denominator");
        return rat_from_string(numerator + "/" + d.text);
    }

    Lexer lex_;
    const std::vector<std::string>& vars_;
};

}  // namespace

Polynomial parse_expr(const std::string& text, const std::vector<std::string>& variables) {
    return Parser(text, variables).parse();
}

}  // namespace c235
