#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "wgm/rat.hpp"

namespace wgm {

/* Shared expression grammar for all printable values:
 *   expr   := term (('+'|'-') term)*
 *   term   := unary (('*'|'/') unary)*
 *   unary  := ('-')* primary ('^' NUM)*
 *   primary:= NUM | IDENT | '(' expr ')'
 * '^' takes a nonnegative integer literal; whitespace insignificant.
 * The Algebra supplies the value type and the operations, so the same
 * parser serves polynomials, localized elements and operators. */

struct Token {
    enum Kind { Num, Ident, Op, End } kind;
    std::string text;  // for Num/Ident; single char for Op
};

inline std::vector<Token> tokenize(const std::string& s)
{
    std::vector<Token> out;
    size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])))
                ++j;
            out.push_back({Token::Num, s.substr(i, j - i)});
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
                ++j;
            out.push_back({Token::Ident, s.substr(i, j - i)});
            i = j;
            continue;
        }
        if (c == '+' || c == '-' || c == '*' || c == '/' || c == '^' || c == '(' ||
            c == ')') {
            out.push_back({Token::Op, std::string(1, c)});
            ++i;
            continue;
        }
        throw ParseError(std::string("unexpected character '") + c + "'");
    }
    out.push_back({Token::End, ""});
    return out;
}

template <class Algebra>
class ExprParser {
  public:
    using V = typename Algebra::Value;

    ExprParser(const Algebra& alg, const std::string& src)
        : alg_(alg), toks_(tokenize(src)) {}

    V parse()
    {
        V v = expr();
        if (!at_end())
            throw ParseError("trailing input near '" + cur().text + "'");
        return v;
    }

  private:
    const Token& cur() const { return toks_[pos_]; }
    bool at_end() const { return cur().kind == Token::End; }
    bool is_op(const char* c) const
    {
        return cur().kind == Token::Op && cur().text == c;
    }
    void advance() { ++pos_; }

    V expr()
    {
        V v = term();
        while (is_op("+") || is_op("-")) {
            bool plus = cur().text == "+";
            advance();
            V rhs = term();
            v = plus ? alg_.add(v, rhs) : alg_.sub(v, rhs);
        }
        return v;
    }

    V term()
    {
        V v = unary();
        while (is_op("*") || is_op("/")) {
            bool mul = cur().text == "*";
            advance();
            V rhs = unary();
            v = mul ? alg_.mul(v, rhs) : alg_.div(v, rhs);
        }
        return v;
    }

    V unary()
    {
        int negs = 0;
        while (is_op("-")) {
            ++negs;
            advance();
        }
        V v = primary();
        while (is_op("^")) {
            advance();
            if (cur().kind != Token::Num)
                throw ParseError("'^' expects a nonnegative integer literal");
            long e = std::stol(cur().text);
            advance();
            v = alg_.pow(v, e);
        }
        return (negs % 2) ? alg_.neg(v) : v;
    }

    V primary()
    {
        if (cur().kind == Token::Num) {
            V v = alg_.from_int(cur().text);
            advance();
            return v;
        }
        if (cur().kind == Token::Ident) {
            V v = alg_.from_ident(cur().text);
            advance();
            return v;
        }
        if (is_op("(")) {
            advance();
            V v = expr();
            if (!is_op(")"))
                throw ParseError("missing ')'");
            advance();
            return v;
        }
        throw ParseError("unexpected token '" + cur().text + "'");
    }

    const Algebra& alg_;
    std::vector<Token> toks_;
    size_t pos_ = 0;
};

}  // namespace wgm
