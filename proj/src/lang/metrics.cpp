#include "rasp/lang/metrics.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace rasp::lang {

namespace {

// Canonical form of an expression with variables substituted by their
// defining expressions. `aggs` is the set of aggregate heads (by canonical
// key) occurring anywhere inside.
struct Canon {
    std::string key;
    std::set<std::string> aggs;
};

struct HeadInfo {
    std::set<std::string> deps;  // aggregate heads inside selector/values
    std::string selector_key;
};

class MetricsPass {
public:
    explicit MetricsPass(const Program& prog) : prog_(prog) {}

    ProgramMetrics run() {
        const FunctionDef& entry = prog_.entry();
        Env env;
        for (const auto& p : entry.params) env[p] = Canon{"free:" + p, {}};
        walk_function(entry, env);

        ProgramMetrics m;
        std::map<std::string, int> level;
        for (const auto& [key, info] : heads_) compute_level(key, level);
        for (const auto& [key, lvl] : level) {
            m.depth = std::max(m.depth, lvl);
            if (static_cast<int>(m.strata_widths.size()) < lvl)
                m.strata_widths.resize(static_cast<size_t>(lvl), 0);
            ++m.strata_widths[static_cast<size_t>(lvl - 1)];
        }
        for (int w : m.strata_widths) m.width = std::max(m.width, w);
        std::set<std::string> selectors;
        for (const auto& [key, info] : heads_) selectors.insert(info.selector_key);
        m.selector_count = static_cast<int>(selectors.size());
        return m;
    }

private:
    using Env = std::map<std::string, Canon>;

    int compute_level(const std::string& key, std::map<std::string, int>& level) {
        if (auto it = level.find(key); it != level.end()) return it->second;
        int lvl = 1;
        for (const auto& dep : heads_.at(key).deps)
            lvl = std::max(lvl, compute_level(dep, level) + 1);
        level[key] = lvl;
        return lvl;
    }

    Canon walk_function(const FunctionDef& def, Env env) {
        for (const auto& stmt : def.body) {
            if (stmt.is_return) return canon(*stmt.values[0], env);
            std::vector<Canon> vals;
            vals.reserve(stmt.values.size());
            for (const auto& e : stmt.values) vals.push_back(canon(*e, env));
            for (size_t i = 0; i < stmt.targets.size(); ++i)
                env[stmt.targets[i]] = std::move(vals[i]);
        }
        return Canon{"void", {}};
    }

    Canon canon(const Expr& e, Env& env) {
        switch (e.type) {
            case NodeType::Paren:
                return canon(*e.kids[0], env);  // parentheses are not identity
            case NodeType::Number: {
                std::ostringstream os;
                os << (e.num_is_real ? 'r' : 'i') << e.num_value;
                return Canon{os.str(), {}};
            }
            case NodeType::Var: {
                if (auto it = env.find(e.name); it != env.end()) return it->second;
                return Canon{"free:" + e.name, {}};
            }
            case NodeType::Neg: {
                Canon c = canon(*e.kids[0], env);
                return Canon{"neg(" + c.key + ")", std::move(c.aggs)};
            }
            case NodeType::Binary:
                return combine(std::string("bin") + binop_name(e.bin_op), e, env);
            case NodeType::Compare:
                return combine(std::string("cmp") + cmp_name(e.cmp), e, env);
            case NodeType::Cond:
                return combine("cond", e, env);
            case NodeType::SelAnd:
                return combine("and", e, env);
            case NodeType::SelOr:
                return combine("or", e, env);
            case NodeType::Select: {
                Canon c = combine(std::string("select") + cmp_name(e.cmp), e, env);
                return c;
            }
            case NodeType::Aggregate: {
                Canon sel = canon(*e.kids[0], env);
                Canon vals = canon(*e.kids[1], env);
                std::string key = "agg(" + sel.key + ";" + vals.key + ")";
                auto& info = heads_[key];
                info.selector_key = sel.key;
                info.deps.insert(sel.aggs.begin(), sel.aggs.end());
                info.deps.insert(vals.aggs.begin(), vals.aggs.end());
                Canon out;
                out.key = key;
                out.aggs = std::move(sel.aggs);
                out.aggs.insert(vals.aggs.begin(), vals.aggs.end());
                out.aggs.insert(key);
                return out;
            }
            case NodeType::Call: {
                const FunctionDef* callee = prog_.find(e.name);
                if (!callee)
                    throw EvalError("no function named '" + e.name + "'", -1, e.loc);
                Env callee_env;
                std::set<std::string> aggs;
                for (size_t i = 0; i < e.kids.size(); ++i) {
                    Canon arg = canon(*e.kids[i], env);
                    aggs.insert(arg.aggs.begin(), arg.aggs.end());
                    callee_env[callee->params[i]] = std::move(arg);
                }
                Canon body = walk_function(*callee, std::move(callee_env));
                body.aggs.insert(aggs.begin(), aggs.end());
                return body;
            }
        }
        throw EvalError("unreachable AST node in metrics pass");
    }

    Canon combine(const std::string& tag, const Expr& e, Env& env) {
        Canon out;
        out.key = tag + "(";
        for (size_t i = 0; i < e.kids.size(); ++i) {
            Canon c = canon(*e.kids[i], env);
            if (i) out.key += ";";
            out.key += c.key;
            out.aggs.insert(c.aggs.begin(), c.aggs.end());
        }
        out.key += ")";
        return out;
    }

    const Program& prog_;
    std::map<std::string, HeadInfo> heads_;
};

}  // namespace

ProgramMetrics metrics(const Program& prog) { return MetricsPass(prog).run(); }

}  // namespace rasp::lang
