#include "rasp/lang/evaluator.hpp"

#include <set>

namespace rasp::lang {

namespace {

const Sequence& as_sequence(const Value& v, SourceLoc loc, const char* what) {
    if (!std::holds_alternative<Sequence>(v))
        throw EvalError(std::string(what) + " must be a sequence, got a selector", -1, loc);
    return std::get<Sequence>(v);
}

const Selector& as_selector(const Value& v, SourceLoc loc, const char* what) {
    if (!std::holds_alternative<Selector>(v))
        throw EvalError(std::string(what) + " must be a selector, got a sequence", -1, loc);
    return std::get<Selector>(v);
}

class Evaluator {
public:
    Evaluator(const Program& prog, const Sequence& input, const EvalOptions& opts)
        : prog_(prog), input_(input), n_(input.length()), opts_(opts) {
        if (n_ < 1) throw EvalError("input sequence must have length >= 1");
    }

    Sequence run_entry() { return run_named(prog_.entry().name, {}); }

    Sequence run_named(const std::string& fn, const std::vector<Value>& args) {
        const FunctionDef* def = prog_.find(fn);
        if (!def) throw EvalError("no function named '" + fn + "'");
        Value v = call(*def, args, def->loc);
        return as_sequence(v, def->loc, "program result");
    }

private:
    using Env = std::map<std::string, Value>;

    Value call(const FunctionDef& def, const std::vector<Value>& args, SourceLoc site) {
        if (args.size() != def.params.size())
            throw EvalError("call to '" + def.name + "' expects " +
                                std::to_string(def.params.size()) + " argument(s), got " +
                                std::to_string(args.size()),
                            -1, site);
        if (active_.count(def.name))
            throw EvalError("recursive call to '" + def.name + "'", -1, site);
        active_.insert(def.name);
        Env env;
        for (size_t i = 0; i < def.params.size(); ++i) env[def.params[i]] = args[i];
        Value result;
        bool returned = false;
        for (const auto& stmt : def.body) {
            if (stmt.is_return) {
                result = eval(*stmt.values[0], env);
                returned = true;
                break;
            }
            // Tuple assignment is parallel: all right-hand sides evaluate
            // before any target binds.
            std::vector<Value> vals;
            vals.reserve(stmt.values.size());
            for (const auto& e : stmt.values) vals.push_back(eval(*e, env));
            for (size_t i = 0; i < stmt.targets.size(); ++i)
                env[stmt.targets[i]] = std::move(vals[i]);
        }
        active_.erase(def.name);
        if (!returned) throw EvalError("function '" + def.name + "' did not return");
        return result;
    }

    Value eval(const Expr& e, Env& env) {
        try {
            return eval_inner(e, env);
        } catch (const EvalError& err) {
            if (err.loc().line == 0) throw err.with_loc(e.loc);
            throw;
        }
    }

    Value eval_inner(const Expr& e, Env& env) {
        switch (e.type) {
            case NodeType::Number: {
                Sequence s;
                s.tokens.assign(static_cast<size_t>(n_),
                                e.num_is_real ? TokenValue::real(e.num_value)
                                              : TokenValue::integer(e.num_value));
                return s;
            }
            case NodeType::Var:
                return lookup(e.name, env, e.loc);
            case NodeType::Paren:
                return eval(*e.kids[0], env);
            case NodeType::Neg:
                return negate(as_sequence(eval(*e.kids[0], env), e.loc, "operand of '-'"));
            case NodeType::Binary: {
                Sequence l = as_sequence(eval(*e.kids[0], env), e.loc, "arithmetic operand");
                Sequence r = as_sequence(eval(*e.kids[1], env), e.loc, "arithmetic operand");
                return elementwise(e.bin_op, l, r);
            }
            case NodeType::Compare: {
                Sequence l = as_sequence(eval(*e.kids[0], env), e.loc, "comparison operand");
                Sequence r = as_sequence(eval(*e.kids[1], env), e.loc, "comparison operand");
                return compare(e.cmp, l, r);
            }
            case NodeType::Cond: {
                Sequence t = as_sequence(eval(*e.kids[0], env), e.loc, "conditional branch");
                Sequence c = as_sequence(eval(*e.kids[1], env), e.loc, "conditional guard");
                Sequence f = as_sequence(eval(*e.kids[2], env), e.loc, "conditional branch");
                return conditional(c, t, f);
            }
            case NodeType::Select: {
                Sequence keys = as_sequence(eval(*e.kids[0], env), e.loc, "select keys");
                Sequence queries = as_sequence(eval(*e.kids[1], env), e.loc, "select queries");
                return select(keys, queries, e.cmp);
            }
            case NodeType::Aggregate: {
                Selector sel =
                    as_selector(eval(*e.kids[0], env), e.loc, "aggregate selector");
                Sequence vals = as_sequence(eval(*e.kids[1], env), e.loc, "aggregate values");
                return aggregate(sel, vals);
            }
            case NodeType::SelAnd: {
                Selector l = as_selector(eval(*e.kids[0], env), e.loc, "operand of 'and'");
                Selector r = as_selector(eval(*e.kids[1], env), e.loc, "operand of 'and'");
                return l.logical_and(r);
            }
            case NodeType::SelOr: {
                Selector l = as_selector(eval(*e.kids[0], env), e.loc, "operand of 'or'");
                Selector r = as_selector(eval(*e.kids[1], env), e.loc, "operand of 'or'");
                return l.logical_or(r);
            }
            case NodeType::Call: {
                const FunctionDef* def = prog_.find(e.name);
                if (!def) throw EvalError("no function named '" + e.name + "'", -1, e.loc);
                std::vector<Value> args;
                args.reserve(e.kids.size());
                for (const auto& k : e.kids) args.push_back(eval(*k, env));
                return call(*def, args, e.loc);
            }
        }
        throw EvalError("unreachable AST node");
    }

    Value lookup(const std::string& name, Env& env, SourceLoc loc) {
        if (auto it = env.find(name); it != env.end()) return it->second;
        if (name == "tokens") return input_;
        if (name == "tokens_int") return int_view(input_);
        if (name == "tokens_float") return float_view(input_);
        if (name == "indices") return indices_sequence(n_);
        if (name == "length") return length_sequence(n_);
        if (auto it = opts_.bindings.find(name); it != opts_.bindings.end()) {
            Sequence s;
            const double v = it->second;
            s.tokens.assign(static_cast<size_t>(n_),
                            TokenValue::is_integral(v) ? TokenValue::integer(v)
                                                       : TokenValue::real(v));
            return s;
        }
        throw EvalError("unbound identifier '" + name + "' (missing binding?)", -1, loc);
    }

    const Program& prog_;
    const Sequence& input_;
    int n_;
    const EvalOptions& opts_;
    std::set<std::string> active_;
};

}  // namespace

Sequence evaluate(const Program& prog, const Sequence& input, const EvalOptions& opts) {
    Evaluator ev(prog, input, opts);
    const FunctionDef& entry = prog.entry();
    if (!entry.params.empty())
        throw EvalError("entry function '" + entry.name +
                        "' takes parameters; call it with explicit arguments");
    return ev.run_entry();
}

Sequence evaluate_function(const Program& prog, const std::string& fn,
                           const Sequence& input, const std::vector<Value>& args,
                           const EvalOptions& opts) {
    Evaluator ev(prog, input, opts);
    return ev.run_named(fn, args);
}

}  // namespace rasp::lang
