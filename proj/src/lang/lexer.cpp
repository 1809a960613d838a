#include "rasp/lang/lexer.hpp"

#include <cctype>

namespace rasp::lang {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return ident_start(c) || std::isdigit(static_cast<unsigned char>(c)); }

Tok keyword_or_ident(const std::string& s) {
    if (s == "def") return Tok::KwDef;
    if (s == "return") return Tok::KwReturn;
    if (s == "if") return Tok::KwIf;
    if (s == "else") return Tok::KwElse;
    if (s == "and") return Tok::KwAnd;
    if (s == "or") return Tok::KwOr;
    return Tok::Ident;
}

}  // namespace

std::vector<Token> lex(std::string_view src) {
    std::vector<Token> out;
    int line = 1, col = 1;
    size_t i = 0;
    auto loc = [&]() { return SourceLoc{line, col}; };
    auto advance = [&](size_t k) {
        for (size_t j = 0; j < k; ++j, ++i) {
            if (src[i] == '\n') { ++line; col = 1; }
            else ++col;
        }
    };
    auto push = [&](Tok t, std::string text, SourceLoc l) {
        out.push_back(Token{t, std::move(text), l});
    };

    while (i < src.size()) {
        char c = src[i];
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') { advance(1); continue; }
        if (c == '#') {
            while (i < src.size() && src[i] != '\n') advance(1);
            continue;
        }
        SourceLoc l = loc();
        if (ident_start(c)) {
            size_t j = i;
            while (j < src.size() && ident_char(src[j])) ++j;
            std::string s(src.substr(i, j - i));
            advance(j - i);
            push(keyword_or_ident(s), s, l);
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            if (j < src.size() && src[j] == '.') {
                ++j;
                if (j >= src.size() || !std::isdigit(static_cast<unsigned char>(src[j])))
                    throw ParseError("malformed number literal", l);
                while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            }
            std::string s(src.substr(i, j - i));
            advance(j - i);
            push(Tok::Number, s, l);
            continue;
        }
        auto two = [&](char second) { return i + 1 < src.size() && src[i + 1] == second; };
        switch (c) {
            case '(': advance(1); push(Tok::LParen, "(", l); break;
            case ')': advance(1); push(Tok::RParen, ")", l); break;
            case '{': advance(1); push(Tok::LBrace, "{", l); break;
            case '}': advance(1); push(Tok::RBrace, "}", l); break;
            case ',': advance(1); push(Tok::Comma, ",", l); break;
            case ';': advance(1); push(Tok::Semi, ";", l); break;
            case '+': advance(1); push(Tok::Plus, "+", l); break;
            case '-': advance(1); push(Tok::Minus, "-", l); break;
            case '*': advance(1); push(Tok::Star, "*", l); break;
            case '%': advance(1); push(Tok::Percent, "%", l); break;
            case '^': advance(1); push(Tok::Caret, "^", l); break;
            case '/':
                if (two('/')) { advance(2); push(Tok::SlashSlash, "//", l); }
                else { advance(1); push(Tok::Slash, "/", l); }
                break;
            case '=':
                if (two('=')) { advance(2); push(Tok::EqEq, "==", l); }
                else { advance(1); push(Tok::Assign, "=", l); }
                break;
            case '!':
                if (two('=')) { advance(2); push(Tok::NotEq, "!=", l); }
                else throw ParseError("unexpected character '!'", l);
                break;
            case '<':
                if (two('=')) { advance(2); push(Tok::Le, "<=", l); }
                else { advance(1); push(Tok::Lt, "<", l); }
                break;
            case '>':
                if (two('=')) { advance(2); push(Tok::Ge, ">=", l); }
                else { advance(1); push(Tok::Gt, ">", l); }
                break;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", l);
        }
    }
    out.push_back(Token{Tok::End, "", loc()});
    return out;
}

}  // namespace rasp::lang
