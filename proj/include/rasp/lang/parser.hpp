#pragma once

#include <string_view>

#include "rasp/lang/ast.hpp"

namespace rasp::lang {

// Parses .rasp source into a Program. Grammar (statements end with ';'):
//
//   program  := def+
//   def      := 'def' IDENT '(' [IDENT (',' IDENT)*] ')' '{' stmt* '}'
//   stmt     := 'return' expr ';'
//             | IDENT (',' IDENT)* '=' expr (',' expr)* ';'
//   expr     := or ['if' or 'else' expr]
//   or       := and ('or' and)*
//   and      := cmp ('and' cmp)*
//   cmp      := add [('=='|'!='|'<'|'<='|'>'|'>=') add]
//   add      := mul (('+'|'-') mul)*
//   mul      := unary (('*'|'/'|'//'|'%') unary)*
//   unary    := '-' unary | power
//   power    := primary ['^' unary]
//   primary  := NUMBER | IDENT | IDENT '(' args ')' | '(' expr ')'
//
// select(keys, queries, PRED) and aggregate(selector, values) are recognized
// by name with fixed arity; PRED is one of the six comparison operators.
Program parse(std::string_view source);

}  // namespace rasp::lang
