/*   Copyright 2026 The fuzzcalc authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
 */

#include "fuzzcalc/parser.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <sstream>
#include <vector>

#include "fuzzcalc/error.hpp"

namespace fuzzcalc {

namespace {

enum class Tok { Number, Ident, LParen, RParen, Comma, Plus, Minus, Star, Caret, End };

struct Token {
    Tok kind;
    std::string text;
    double number = 0.0;
    int line = 1, col = 1;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) { advance(); }

    const Token& peek() const { return tok_; }

    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
            bump();
        tok_ = {Tok::End, "", 0.0, line_, col_};
        if (pos_ >= src_.size())
            return;
        const char c = src_[pos_];
        tok_.line = line_;
        tok_.col = col_;
        switch (c) {
        case '(': tok_ = {Tok::LParen, "(", 0.0, line_, col_}; bump(); return;
        case ')': tok_ = {Tok::RParen, ")", 0.0, line_, col_}; bump(); return;
        case ',': tok_ = {Tok::Comma, ",", 0.0, line_, col_}; bump(); return;
        case '+': tok_ = {Tok::Plus, "+", 0.0, line_, col_}; bump(); return;
        case '-': tok_ = {Tok::Minus, "-", 0.0, line_, col_}; bump(); return;
        case '*': tok_ = {Tok::Star, "*", 0.0, line_, col_}; bump(); return;
        case '^': tok_ = {Tok::Caret, "^", 0.0, line_, col_}; bump(); return;
        default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            lex_number();
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string ident;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
                ident += src_[pos_];
                bump();
            }
            tok_.kind = Tok::Ident;
            tok_.text = std::move(ident);
            return;
        }
        fail(std::string("unexpected character '") + c + "'", line_, col_);
    }

    void lex_number() {
        const std::size_t start = pos_;
        while (pos_ < src_.size() && (std::isdigit(static_cast<unsigned char>(src_[pos_])) ||
                                      src_[pos_] == '.'))
            bump();
        // scientific notation
        if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
            std::size_t mark = pos_;
            bump();
            if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-'))
                bump();
            if (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
                    bump();
            } else {
                pos_ = mark; // the 'e' belongs to an identifier, back off
            }
        }
        std::string_view s = src_.substr(start, pos_ - start);
        double v = 0.0;
        auto res = std::from_chars(s.data(), s.data() + s.size(), v);
        if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
            fail("malformed number '" + std::string(s) + "'", tok_.line, tok_.col);
        tok_.kind = Tok::Number;
        tok_.number = v;
        tok_.text = std::string(s);
    }

    void bump() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    [[noreturn]] static void fail(const std::string& msg, int line, int col) {
        std::ostringstream os;
        os << "syntax error at " << line << ":" << col << ": " << msg;
        throw Error(ErrorCode::ParseError, os.str());
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token tok_;
};

class Parser {
public:
    Parser(std::string_view text, int arity, const AlphaGrid& grid)
        : lex_(text), arity_(arity), grid_(grid) {}

    FuzzyExpr parse_expression() {
        std::vector<FuzzyTerm> terms;
        terms.push_back(parse_term());
        while (accept(Tok::Plus))
            terms.push_back(parse_term());
        expect(Tok::End, "end of input");
        return FuzzyExpr(arity_, std::move(terms));
    }

    FuzzyNumber parse_literal_only() {
        FuzzyNumber n = parse_fuzzylit();
        expect(Tok::End, "end of input");
        return n;
    }

private:
    bool at_fuzzylit() const {
        const Token& t = lex_.peek();
        return t.kind == Tok::Ident &&
               (t.text == "tfn" || t.text == "tpfn" || t.text == "crisp");
    }

    FuzzyTerm parse_term() {
        if (at_fuzzylit()) {
            FuzzyNumber coeff = parse_fuzzylit();
            if (accept(Tok::Star)) {
                CrispExpr crisp = parse_factor();
                return {std::move(coeff), std::move(crisp)};
            }
            return {std::move(coeff), CrispExpr::constant(1.0)};
        }
        CrispExpr crisp = parse_factor();
        return {FuzzyNumber::crisp(1.0, grid_), std::move(crisp)};
    }

    // factor := product ('-' product)*; '+' separates fuzzy terms here
    CrispExpr parse_factor() {
        CrispExpr e = parse_product();
        while (accept(Tok::Minus))
            e = CrispExpr::sub(e, parse_product());
        return e;
    }

    // full crisp expression with '+', valid inside parentheses
    CrispExpr parse_crisp_expr() {
        CrispExpr e = parse_product();
        for (;;) {
            if (accept(Tok::Plus))
                e = CrispExpr::add(e, parse_product());
            else if (accept(Tok::Minus))
                e = CrispExpr::sub(e, parse_product());
            else
                return e;
        }
    }

    CrispExpr parse_product() {
        CrispExpr e = parse_power();
        while (accept(Tok::Star))
            e = CrispExpr::mul(e, parse_power());
        return e;
    }

    CrispExpr parse_power() {
        CrispExpr e = parse_atom();
        if (accept(Tok::Caret)) {
            Token t = expect(Tok::Number, "integer exponent");
            double v = t.number;
            if (v < 0.0 || v != std::floor(v))
                fail(t, "exponent must be a nonnegative integer");
            e = CrispExpr::pow(e, static_cast<int>(v));
        }
        return e;
    }

    CrispExpr parse_atom() {
        const Token& t = lex_.peek();
        switch (t.kind) {
        case Tok::Minus: {
            lex_.take();
            CrispExpr a = parse_atom();
            if (a.kind() == NodeKind::Constant)
                return CrispExpr::constant(-a.constant_value());
            return CrispExpr::mul(CrispExpr::constant(-1.0), a);
        }
        case Tok::Number:
            return CrispExpr::constant(lex_.take().number);
        case Tok::LParen: {
            lex_.take();
            CrispExpr e = parse_crisp_expr();
            expect(Tok::RParen, "')'");
            return e;
        }
        case Tok::Ident: {
            Token id = lex_.take();
            if (id.text == "sin" || id.text == "cos" || id.text == "exp") {
                expect(Tok::LParen, "'('");
                CrispExpr a = parse_crisp_expr();
                expect(Tok::RParen, "')'");
                if (id.text == "sin")
                    return CrispExpr::sin(a);
                if (id.text == "cos")
                    return CrispExpr::cos(a);
                return CrispExpr::exp(a);
            }
            if (id.text == "tfn" || id.text == "tpfn" || id.text == "crisp")
                fail(id, "fuzzy literals may only appear as term coefficients");
            if (id.text.size() > 1 && id.text[0] == 'x') {
                int idx = 0;
                auto res = std::from_chars(id.text.data() + 1, id.text.data() + id.text.size(), idx);
                if (res.ec == std::errc{} && res.ptr == id.text.data() + id.text.size() && idx >= 1) {
                    if (idx > arity_) {
                        std::ostringstream os;
                        os << "variable x" << idx << " exceeds declared arity " << arity_ << " at "
                           << id.line << ":" << id.col;
                        throw Error(ErrorCode::ArityError, os.str());
                    }
                    return CrispExpr::variable(idx);
                }
            }
            fail(id, "unknown identifier '" + id.text + "'");
        }
        default:
            fail(t, "expected a number, variable or '('");
        }
    }

    FuzzyNumber parse_fuzzylit() {
        Token id = expect(Tok::Ident, "fuzzy literal");
        if (id.text != "tfn" && id.text != "tpfn" && id.text != "crisp")
            fail(id, "expected a fuzzy literal (tfn/tpfn/crisp)");
        expect(Tok::LParen, "'('");
        std::vector<double> args;
        args.push_back(parse_real());
        while (accept(Tok::Comma))
            args.push_back(parse_real());
        Token close = expect(Tok::RParen, "')'");
        auto wrong_count = [&](std::size_t want) {
            if (args.size() != want) {
                std::ostringstream os;
                os << id.text << " takes " << want << " parameters, got " << args.size();
                fail(close, os.str());
            }
        };
        try {
            if (id.text == "tfn") {
                wrong_count(3);
                return FuzzyNumber::triangular(args[0], args[1], args[2], grid_);
            }
            if (id.text == "tpfn") {
                wrong_count(4);
                return FuzzyNumber::trapezoidal(args[0], args[1], args[2], args[3], grid_);
            }
            wrong_count(1);
            return FuzzyNumber::crisp(args[0], grid_);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::InvalidShape)
                throw;
            std::ostringstream os;
            os << "malformed fuzzy literal at " << id.line << ":" << id.col << ": " << e.what();
            throw Error(ErrorCode::InvalidShape, os.str());
        }
    }

    double parse_real() {
        double sign = 1.0;
        while (lex_.peek().kind == Tok::Minus || lex_.peek().kind == Tok::Plus) {
            if (lex_.take().kind == Tok::Minus)
                sign = -sign;
        }
        Token t = expect(Tok::Number, "real number");
        return sign * t.number;
    }

    bool accept(Tok k) {
        if (lex_.peek().kind == k) {
            lex_.take();
            return true;
        }
        return false;
    }

    Token expect(Tok k, const std::string& what) {
        if (lex_.peek().kind != k)
            fail(lex_.peek(), "expected " + what);
        return lex_.take();
    }

    [[noreturn]] static void fail(const Token& t, const std::string& msg) {
        std::ostringstream os;
        os << "syntax error at " << t.line << ":" << t.col << ": " << msg;
        throw Error(ErrorCode::ParseError, os.str());
    }

    Lexer lex_;
    int arity_;
    AlphaGrid grid_;
};

} // namespace

FuzzyExpr parse(std::string_view text, int arity, const AlphaGrid& grid) {
    if (arity < 1)
        throw Error(ErrorCode::InvalidArgument, "arity must be positive");
    Parser p(text, arity, grid);
    return p.parse_expression();
}

int infer_arity(std::string_view text) {
    Lexer lex(text);
    int max_var = 1;
    for (;;) {
        Token t = lex.take();
        if (t.kind == Tok::End)
            break;
        if (t.kind == Tok::Ident && t.text.size() > 1 && t.text[0] == 'x') {
            int idx = 0;
            auto res = std::from_chars(t.text.data() + 1, t.text.data() + t.text.size(), idx);
            if (res.ec == std::errc{} && res.ptr == t.text.data() + t.text.size() && idx > max_var)
                max_var = idx;
        }
    }
    return max_var;
}

FuzzyNumber parse_fuzzy_literal(std::string_view text, const AlphaGrid& grid) {
    Parser p(text, 1, grid);
    return p.parse_literal_only();
}

} // namespace fuzzcalc
