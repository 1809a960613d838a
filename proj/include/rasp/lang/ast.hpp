#pragma once

#include <memory>
#include <string>
#include <vector>

#include "rasp/error.hpp"
#include "rasp/seqcore.hpp"

namespace rasp::lang {

enum class NodeType : uint8_t {
    Number,     // numeric literal
    Var,        // identifier reference
    Binary,     // arithmetic operator
    Compare,    // comparison yielding a boolean sequence
    Neg,        // unary minus
    Cond,       // "then if cond else otherwise"
    Select,     // select(keys, queries, predicate)
    Aggregate,  // aggregate(selector, values)
    SelAnd,     // selector conjunction
    SelOr,      // selector disjunction
    Call,       // user-defined function call
    Paren       // explicit parentheses (kept for faithful printing)
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    NodeType type;
    SourceLoc loc;

    // Number
    double num_value = 0.0;
    bool num_is_real = false;  // literal contained a decimal point
    std::string num_text;      // original spelling

    // Var / Call
    std::string name;

    BinOp bin_op = BinOp::Add;  // Binary
    Cmp cmp = Cmp::Eq;          // Compare, Select

    // Binary/Compare/SelAnd/SelOr: [lhs, rhs]
    // Neg/Paren: [inner]
    // Cond: [then, cond, otherwise]
    // Select: [keys, queries]
    // Aggregate: [selector, values]
    // Call: arguments
    std::vector<ExprPtr> kids;
};

struct Stmt {
    SourceLoc loc;
    bool is_return = false;
    std::vector<std::string> targets;  // empty for return
    std::vector<ExprPtr> values;       // parallel to targets; single expr for return
};

struct FunctionDef {
    std::string name;
    std::vector<std::string> params;
    std::vector<Stmt> body;
    SourceLoc loc;
};

// A parsed RASP program: an ordered list of function definitions. The entry
// point is the last definition. Functions may call earlier definitions only,
// so the call graph is acyclic by construction.
struct Program {
    std::vector<FunctionDef> functions;

    const FunctionDef& entry() const {
        if (functions.empty()) throw EvalError("program has no functions");
        return functions.back();
    }
    const FunctionDef* find(const std::string& fn) const {
        for (const auto& f : functions)
            if (f.name == fn) return &f;
        return nullptr;
    }
};

inline ExprPtr make_expr(Expr e) { return std::make_shared<const Expr>(std::move(e)); }

}  // namespace rasp::lang
