#include "finicert/expr.hpp"

#include <cctype>
#include <sstream>

#include "finicert/errors.hpp"

namespace finicert {

namespace {

enum class TokKind { Number, Ident, Plus, Minus, Star, Caret, LParen, RParen, End };

struct Token {
    TokKind kind;
    std::string text; // Number / Ident payload
    int line;
    int column;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) {}

    Token next() {
        skip_ws();
        const int line = line_, col = col_;
        if (pos_ >= text_.size()) return {TokKind::End, "", line, col};
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) return lex_number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return lex_ident();
        advance();
        switch (c) {
        case '+': return {TokKind::Plus, "+", line, col};
        case '-': return {TokKind::Minus, "-", line, col};
        case '*': return {TokKind::Star, "*", line, col};
        case '^': return {TokKind::Caret, "^", line, col};
        case '(': return {TokKind::LParen, "(", line, col};
        case ')': return {TokKind::RParen, ")", line, col};
        default:
            throw ParseError(line, col, std::string("unexpected character '") + c + "'");
        }
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            advance();
    }

    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    Token lex_number() {
        const int line = line_, col = col_;
        std::string s;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            s += text_[pos_];
            advance();
        }
        // A rational literal "a/b" is one token; the slash must follow the
        // digits immediately and be followed by digits.
        if (pos_ + 1 < text_.size() && text_[pos_] == '/' &&
            std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
            s += '/';
            advance();
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                s += text_[pos_];
                advance();
            }
        }
        return {TokKind::Number, s, line, col};
    }

    Token lex_ident() {
        const int line = line_, col = col_;
        std::string s;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
            s += text_[pos_];
            advance();
        }
        return {TokKind::Ident, s, line, col};
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

class Parser {
public:
    Parser(const std::string& text, const RingContext& ring)
        : lexer_(text), ring_(ring) {
        cur_ = lexer_.next();
    }

    Polynomial parse() {
        Polynomial p = expression();
        expect(TokKind::End, "end of input");
        return p;
    }

private:
    Polynomial expression() {
        bool negate = false;
        if (cur_.kind == TokKind::Minus) {
            negate = true;
            bump();
        }
        Polynomial acc = term();
        if (negate) acc = -acc;
        while (cur_.kind == TokKind::Plus || cur_.kind == TokKind::Minus) {
            const bool minus = cur_.kind == TokKind::Minus;
            bump();
            Polynomial rhs = term();
            acc = minus ? acc - rhs : acc + rhs;
        }
        return acc;
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (cur_.kind == TokKind::Star) {
            bump();
            acc = acc * factor();
        }
        return acc;
    }

    Polynomial factor() {
        Polynomial base = atom();
        if (cur_.kind == TokKind::Caret) {
            bump();
            if (cur_.kind != TokKind::Number || cur_.text.find('/') != std::string::npos)
                fail("expected a nonnegative integer exponent");
            unsigned long e;
            try {
                e = std::stoul(cur_.text);
            } catch (const std::exception&) {
                fail("exponent out of range");
            }
            bump();
            return base.pow(e);
        }
        return base;
    }

    Polynomial atom() {
        switch (cur_.kind) {
        case TokKind::Number: {
            Scalar c;
            try {
                c = parse_scalar(cur_.text);
            } catch (const InputError& e) {
                fail(e.what());
            }
            bump();
            return Polynomial::constant(ring_.arity(), c);
        }
        case TokKind::Ident: {
            auto idx = ring_.index_of(cur_.text);
            if (!idx) fail("unknown variable '" + cur_.text + "'");
            bump();
            return ring_.var(*idx);
        }
        case TokKind::LParen: {
            bump();
            Polynomial p = expression();
            expect(TokKind::RParen, "')'");
            return p;
        }
        default:
            fail("expected a number, variable, or '('");
        }
    }

    void bump() { cur_ = lexer_.next(); }

    void expect(TokKind kind, const std::string& what) {
        if (cur_.kind != kind) fail("expected " + what);
        if (kind != TokKind::End) bump();
    }

    [[noreturn]] void fail(const std::string& msg) {
        throw ParseError(cur_.line, cur_.column, msg);
    }

    Lexer lexer_;
    const RingContext& ring_;
    Token cur_;
};

bool is_one(const Scalar& s) { return s == 1; }

std::string term_body(const Term& t, const RingContext& ring) {
    // Renders |coeff| * monomial, omitting a unit coefficient in front of
    // a nonunit monomial.
    Scalar c = abs(t.coeff);
    std::ostringstream out;
    bool printed = false;
    if (t.mono.is_unit() || !is_one(c)) {
        out << scalar_to_string(c);
        printed = true;
    }
    for (std::size_t i = 0; i < t.mono.arity(); ++i) {
        const unsigned e = t.mono.exponent(i);
        if (e == 0) continue;
        if (printed) out << "*";
        out << ring.name(i);
        if (e > 1) out << "^" << e;
        printed = true;
    }
    return out.str();
}

} // namespace

Polynomial parse_polynomial(const std::string& text, const RingContext& ring) {
    return Parser(text, ring).parse();
}

std::string polynomial_to_string(const Polynomial& p, const RingContext& ring) {
    if (p.arity() != ring.arity()) throw ArityMismatch("ring does not match polynomial arity");
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& t : p.terms()) {
        const bool neg = sgn(t.coeff) < 0;
        if (first) {
            if (neg) out << "-";
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        out << term_body(t, ring);
    }
    return out.str();
}

} // namespace finicert
