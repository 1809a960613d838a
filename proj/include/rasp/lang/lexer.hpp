#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rasp/error.hpp"

namespace rasp::lang {

enum class Tok : uint8_t {
    Ident, Number,
    KwDef, KwReturn, KwIf, KwElse, KwAnd, KwOr,
    LParen, RParen, LBrace, RBrace, Comma, Semi, Assign,
    Plus, Minus, Star, Slash, SlashSlash, Percent, Caret,
    EqEq, NotEq, Lt, Le, Gt, Ge,
    End
};

struct Token {
    Tok type;
    std::string text;
    SourceLoc loc;
};

// Tokenizes .rasp source. '#' starts a line comment; whitespace is
// insignificant; identifiers are ASCII.
std::vector<Token> lex(std::string_view source);

}  // namespace rasp::lang
