#include "rasp/lang/printer.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

namespace rasp::lang {

namespace {

// Binding strength used only as a safety net: parse-built ASTs carry explicit
// Paren nodes wherever the source had them, so extra parentheses never print.
int precedence(const Expr& e) {
    switch (e.type) {
        case NodeType::Cond: return 0;
        case NodeType::SelOr: return 1;
        case NodeType::SelAnd: return 2;
        case NodeType::Compare: return 3;
        case NodeType::Binary:
            switch (e.bin_op) {
                case BinOp::Add:
                case BinOp::Sub: return 4;
                case BinOp::Mul:
                case BinOp::Div:
                case BinOp::FloorDiv:
                case BinOp::Mod: return 5;
                case BinOp::Pow: return 7;
            }
            return 4;
        case NodeType::Neg: return 6;
        default: return 8;
    }
}

void print_expr(const Expr& e, int min_prec, std::string& out) {
    const int prec = precedence(e);
    const bool need_paren = prec < min_prec;
    if (need_paren) out += '(';
    switch (e.type) {
        case NodeType::Number:
            out += e.num_text;
            break;
        case NodeType::Var:
            out += e.name;
            break;
        case NodeType::Binary:
            // '^' is right-associative and admits a unary-minus exponent.
            if (e.bin_op == BinOp::Pow) {
                print_expr(*e.kids[0], prec + 1, out);
                out += binop_name(e.bin_op);
                print_expr(*e.kids[1], prec - 1, out);
            } else {
                print_expr(*e.kids[0], prec, out);
                out += binop_name(e.bin_op);
                print_expr(*e.kids[1], prec + 1, out);
            }
            break;
        case NodeType::Compare:
            print_expr(*e.kids[0], prec + 1, out);
            out += cmp_name(e.cmp);
            print_expr(*e.kids[1], prec + 1, out);
            break;
        case NodeType::Neg:
            out += '-';
            print_expr(*e.kids[0], prec, out);
            break;
        case NodeType::Cond:
            print_expr(*e.kids[0], prec + 1, out);
            out += " if ";
            print_expr(*e.kids[1], prec + 1, out);
            out += " else ";
            print_expr(*e.kids[2], prec, out);
            break;
        case NodeType::Select:
            out += "select(";
            print_expr(*e.kids[0], 0, out);
            out += ", ";
            print_expr(*e.kids[1], 0, out);
            out += ", ";
            out += cmp_name(e.cmp);
            out += ')';
            break;
        case NodeType::Aggregate:
            out += "aggregate(";
            print_expr(*e.kids[0], 0, out);
            out += ", ";
            print_expr(*e.kids[1], 0, out);
            out += ')';
            break;
        case NodeType::SelAnd:
            print_expr(*e.kids[0], prec, out);
            out += " and ";
            print_expr(*e.kids[1], prec + 1, out);
            break;
        case NodeType::SelOr:
            print_expr(*e.kids[0], prec, out);
            out += " or ";
            print_expr(*e.kids[1], prec + 1, out);
            break;
        case NodeType::Call: {
            out += e.name;
            out += '(';
            bool first = true;
            for (const auto& k : e.kids) {
                if (!first) out += ", ";
                first = false;
                print_expr(*k, 0, out);
            }
            out += ')';
            break;
        }
        case NodeType::Paren:
            out += '(';
            print_expr(*e.kids[0], 0, out);
            out += ')';
            break;
    }
    if (need_paren) out += ')';
}

void print_stmt(const Stmt& s, std::string& out) {
    out += "  ";
    if (s.is_return) {
        out += "return ";
        print_expr(*s.values[0], 0, out);
        out += ";\n";
        return;
    }
    for (size_t i = 0; i < s.targets.size(); ++i) {
        if (i) out += ", ";
        out += s.targets[i];
    }
    out += " = ";
    for (size_t i = 0; i < s.values.size(); ++i) {
        if (i) out += ", ";
        print_expr(*s.values[i], 0, out);
    }
    out += ";\n";
}

}  // namespace

std::string print(const Expr& e) {
    std::string out;
    print_expr(e, 0, out);
    return out;
}

std::string print(const Program& prog) {
    std::string out;
    for (size_t fi = 0; fi < prog.functions.size(); ++fi) {
        const auto& f = prog.functions[fi];
        if (fi) out += '\n';
        out += "def " + f.name + "(";
        for (size_t i = 0; i < f.params.size(); ++i) {
            if (i) out += ", ";
            out += f.params[i];
        }
        out += "){\n";
        for (const auto& s : f.body) print_stmt(s, out);
        out += "}\n";
    }
    return out;
}

namespace {

using json = nlohmann::ordered_json;

json span_json(SourceLoc loc) { return json{{"line", loc.line}, {"col", loc.col}}; }

json expr_json(const Expr& e) {
    json j;
    switch (e.type) {
        case NodeType::Number:
            j["type"] = "number";
            j["text"] = e.num_text;
            j["value"] = e.num_value;
            break;
        case NodeType::Var:
            j["type"] = "var";
            j["name"] = e.name;
            break;
        case NodeType::Binary:
            j["type"] = "binary";
            j["op"] = binop_name(e.bin_op);
            break;
        case NodeType::Compare:
            j["type"] = "compare";
            j["op"] = cmp_name(e.cmp);
            break;
        case NodeType::Neg:
            j["type"] = "neg";
            break;
        case NodeType::Cond:
            j["type"] = "cond";
            break;
        case NodeType::Select:
            j["type"] = "select";
            j["predicate"] = cmp_name(e.cmp);
            break;
        case NodeType::Aggregate:
            j["type"] = "aggregate";
            break;
        case NodeType::SelAnd:
            j["type"] = "and";
            break;
        case NodeType::SelOr:
            j["type"] = "or";
            break;
        case NodeType::Call:
            j["type"] = "call";
            j["name"] = e.name;
            break;
        case NodeType::Paren:
            j["type"] = "paren";
            break;
    }
    j["span"] = span_json(e.loc);
    if (!e.kids.empty()) {
        json kids = json::array();
        for (const auto& k : e.kids) kids.push_back(expr_json(*k));
        j["children"] = std::move(kids);
    }
    return j;
}

}  // namespace

std::string ast_json(const Program& prog) {
    json j;
    j["functions"] = json::array();
    for (const auto& f : prog.functions) {
        json fj;
        fj["name"] = f.name;
        fj["params"] = f.params;
        fj["span"] = span_json(f.loc);
        fj["body"] = json::array();
        for (const auto& s : f.body) {
            json sj;
            sj["type"] = s.is_return ? "return" : "assign";
            sj["span"] = span_json(s.loc);
            if (!s.is_return) sj["targets"] = s.targets;
            json vals = json::array();
            for (const auto& v : s.values) vals.push_back(expr_json(*v));
            sj["values"] = std::move(vals);
            fj["body"].push_back(std::move(sj));
        }
        j["functions"].push_back(std::move(fj));
    }
    return j.dump(2);
}

}  // namespace rasp::lang
