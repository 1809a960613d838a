#include "rasp/lang/parser.hpp"

#include <charconv>
#include <map>

#include "rasp/lang/lexer.hpp"

namespace rasp::lang {

namespace {

class Parser {
public:
    explicit Parser(std::string_view src) : toks_(lex(src)) {}

    Program parse_program() {
        Program prog;
        while (!at(Tok::End)) prog.functions.push_back(parse_def());
        if (prog.functions.empty())
            throw ParseError("expected at least one function definition", cur().loc);
        return prog;
    }

private:
    const Token& cur() const { return toks_[pos_]; }
    bool at(Tok t) const { return cur().type == t; }
    const Token& eat(Tok t, const char* what) {
        if (!at(t))
            throw ParseError(std::string("expected ") + what + ", got '" + cur().text + "'",
                             cur().loc);
        return toks_[pos_++];
    }
    bool accept(Tok t) {
        if (!at(t)) return false;
        ++pos_;
        return true;
    }

    FunctionDef parse_def() {
        FunctionDef def;
        def.loc = cur().loc;
        eat(Tok::KwDef, "'def'");
        def.name = eat(Tok::Ident, "function name").text;
        eat(Tok::LParen, "'('");
        if (!at(Tok::RParen)) {
            def.params.push_back(eat(Tok::Ident, "parameter name").text);
            while (accept(Tok::Comma))
                def.params.push_back(eat(Tok::Ident, "parameter name").text);
        }
        eat(Tok::RParen, "')'");
        eat(Tok::LBrace, "'{'");
        bool returned = false;
        while (!at(Tok::RBrace)) {
            def.body.push_back(parse_stmt());
            returned = def.body.back().is_return;
        }
        eat(Tok::RBrace, "'}'");
        if (!returned)
            throw ParseError("function '" + def.name + "' does not end with a return",
                             def.loc);
        known_functions_[def.name] = def.params.size();
        return def;
    }

    Stmt parse_stmt() {
        Stmt s;
        s.loc = cur().loc;
        if (accept(Tok::KwReturn)) {
            s.is_return = true;
            s.values.push_back(parse_expr());
            eat(Tok::Semi, "';'");
            return s;
        }
        s.targets.push_back(eat(Tok::Ident, "assignment target").text);
        while (accept(Tok::Comma))
            s.targets.push_back(eat(Tok::Ident, "assignment target").text);
        eat(Tok::Assign, "'='");
        s.values.push_back(parse_expr());
        while (accept(Tok::Comma)) s.values.push_back(parse_expr());
        eat(Tok::Semi, "';'");
        if (s.targets.size() != s.values.size())
            throw ParseError("tuple assignment arity mismatch: " +
                                 std::to_string(s.targets.size()) + " targets, " +
                                 std::to_string(s.values.size()) + " values",
                             s.loc);
        return s;
    }

    ExprPtr parse_expr() {
        ExprPtr value = parse_or();
        if (at(Tok::KwIf)) {
            Expr e;
            e.type = NodeType::Cond;
            e.loc = cur().loc;
            eat(Tok::KwIf, "'if'");
            ExprPtr cond = parse_or();
            eat(Tok::KwElse, "'else'");
            ExprPtr otherwise = parse_expr();
            e.kids = {value, cond, otherwise};
            return make_expr(std::move(e));
        }
        return value;
    }

    ExprPtr parse_or() {
        ExprPtr lhs = parse_and();
        while (at(Tok::KwOr)) {
            Expr e;
            e.type = NodeType::SelOr;
            e.loc = cur().loc;
            eat(Tok::KwOr, "'or'");
            e.kids = {lhs, parse_and()};
            lhs = make_expr(std::move(e));
        }
        return lhs;
    }

    ExprPtr parse_and() {
        ExprPtr lhs = parse_cmp();
        while (at(Tok::KwAnd)) {
            Expr e;
            e.type = NodeType::SelAnd;
            e.loc = cur().loc;
            eat(Tok::KwAnd, "'and'");
            e.kids = {lhs, parse_cmp()};
            lhs = make_expr(std::move(e));
        }
        return lhs;
    }

    bool cmp_token(Cmp* out) const {
        switch (cur().type) {
            case Tok::EqEq: *out = Cmp::Eq; return true;
            case Tok::NotEq: *out = Cmp::Ne; return true;
            case Tok::Lt: *out = Cmp::Lt; return true;
            case Tok::Le: *out = Cmp::Le; return true;
            case Tok::Gt: *out = Cmp::Gt; return true;
            case Tok::Ge: *out = Cmp::Ge; return true;
            default: return false;
        }
    }

    ExprPtr parse_cmp() {
        ExprPtr lhs = parse_add();
        Cmp op;
        if (cmp_token(&op)) {
            Expr e;
            e.type = NodeType::Compare;
            e.cmp = op;
            e.loc = cur().loc;
            ++pos_;
            e.kids = {lhs, parse_add()};
            return make_expr(std::move(e));
        }
        return lhs;
    }

    ExprPtr parse_add() {
        ExprPtr lhs = parse_mul();
        while (at(Tok::Plus) || at(Tok::Minus)) {
            Expr e;
            e.type = NodeType::Binary;
            e.bin_op = at(Tok::Plus) ? BinOp::Add : BinOp::Sub;
            e.loc = cur().loc;
            ++pos_;
            e.kids = {lhs, parse_mul()};
            lhs = make_expr(std::move(e));
        }
        return lhs;
    }

    ExprPtr parse_mul() {
        ExprPtr lhs = parse_unary();
        for (;;) {
            BinOp op;
            if (at(Tok::Star)) op = BinOp::Mul;
            else if (at(Tok::Slash)) op = BinOp::Div;
            else if (at(Tok::SlashSlash)) op = BinOp::FloorDiv;
            else if (at(Tok::Percent)) op = BinOp::Mod;
            else break;
            Expr e;
            e.type = NodeType::Binary;
            e.bin_op = op;
            e.loc = cur().loc;
            ++pos_;
            e.kids = {lhs, parse_unary()};
            lhs = make_expr(std::move(e));
        }
        return lhs;
    }

    ExprPtr parse_unary() {
        if (at(Tok::Minus)) {
            Expr e;
            e.type = NodeType::Neg;
            e.loc = cur().loc;
            ++pos_;
            e.kids = {parse_unary()};
            return make_expr(std::move(e));
        }
        return parse_power();
    }

    ExprPtr parse_power() {
        ExprPtr base = parse_primary();
        if (at(Tok::Caret)) {
            Expr e;
            e.type = NodeType::Binary;
            e.bin_op = BinOp::Pow;
            e.loc = cur().loc;
            ++pos_;
            e.kids = {base, parse_unary()};  // right-associative exponent
            return make_expr(std::move(e));
        }
        return base;
    }

    ExprPtr parse_primary() {
        if (at(Tok::Number)) {
            Expr e;
            e.type = NodeType::Number;
            e.loc = cur().loc;
            e.num_text = cur().text;
            e.num_is_real = e.num_text.find('.') != std::string::npos;
            const char* first = e.num_text.data();
            const char* last = first + e.num_text.size();
            std::from_chars(first, last, e.num_value);
            ++pos_;
            return make_expr(std::move(e));
        }
        if (at(Tok::LParen)) {
            Expr e;
            e.type = NodeType::Paren;
            e.loc = cur().loc;
            ++pos_;
            e.kids = {parse_expr()};
            eat(Tok::RParen, "')'");
            return make_expr(std::move(e));
        }
        if (at(Tok::Ident)) {
            Token id = toks_[pos_++];
            if (!at(Tok::LParen)) {
                Expr e;
                e.type = NodeType::Var;
                e.name = id.text;
                e.loc = id.loc;
                return make_expr(std::move(e));
            }
            if (id.text == "select") return parse_select(id.loc);
            if (id.text == "aggregate") return parse_aggregate(id.loc);
            return parse_call(id);
        }
        throw ParseError("expected an expression, got '" + cur().text + "'", cur().loc);
    }

    ExprPtr parse_select(SourceLoc loc) {
        Expr e;
        e.type = NodeType::Select;
        e.loc = loc;
        eat(Tok::LParen, "'('");
        e.kids.push_back(parse_expr());
        if (!accept(Tok::Comma))
            throw ParseError("select expects (keys, queries, predicate)", loc);
        e.kids.push_back(parse_expr());
        if (!accept(Tok::Comma))
            throw ParseError("select expects (keys, queries, predicate)", loc);
        if (!cmp_token(&e.cmp))
            throw ParseError("select predicate must be one of == != < <= > >=",
                             cur().loc);
        ++pos_;
        eat(Tok::RParen, "')'");
        return make_expr(std::move(e));
    }

    ExprPtr parse_aggregate(SourceLoc loc) {
        Expr e;
        e.type = NodeType::Aggregate;
        e.loc = loc;
        eat(Tok::LParen, "'('");
        e.kids.push_back(parse_expr());
        if (!accept(Tok::Comma))
            throw ParseError("aggregate expects (selector, values)", loc);
        e.kids.push_back(parse_expr());
        eat(Tok::RParen, "')'");
        return make_expr(std::move(e));
    }

    ExprPtr parse_call(const Token& id) {
        auto it = known_functions_.find(id.text);
        if (it == known_functions_.end())
            throw ParseError("call to unknown function '" + id.text + "'", id.loc);
        Expr e;
        e.type = NodeType::Call;
        e.name = id.text;
        e.loc = id.loc;
        eat(Tok::LParen, "'('");
        if (!at(Tok::RParen)) {
            e.kids.push_back(parse_expr());
            while (accept(Tok::Comma)) e.kids.push_back(parse_expr());
        }
        eat(Tok::RParen, "')'");
        if (e.kids.size() != it->second)
            throw ParseError("call to '" + id.text + "' expects " +
                                 std::to_string(it->second) + " argument(s), got " +
                                 std::to_string(e.kids.size()),
                             id.loc);
        return make_expr(std::move(e));
    }

    std::vector<Token> toks_;
    size_t pos_ = 0;
    std::map<std::string, size_t> known_functions_;
};

}  // namespace

Program parse(std::string_view source) { return Parser(source).parse_program(); }

}  // namespace rasp::lang
