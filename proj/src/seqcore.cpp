#include "rasp/seqcore.hpp"

#include <cmath>

namespace rasp {

const char* cmp_name(Cmp c) {
    switch (c) {
        case Cmp::Eq: return "==";
        case Cmp::Ne: return "!=";
        case Cmp::Lt: return "<";
        case Cmp::Le: return "<=";
        case Cmp::Gt: return ">";
        case Cmp::Ge: return ">=";
    }
    return "?";
}

const char* binop_name(BinOp op) {
    switch (op) {
        case BinOp::Add: return "+";
        case BinOp::Sub: return "-";
        case BinOp::Mul: return "*";
        case BinOp::Div: return "/";
        case BinOp::FloorDiv: return "//";
        case BinOp::Mod: return "%";
        case BinOp::Pow: return "^";
    }
    return "?";
}

Selector Selector::logical_and(const Selector& other) const {
    if (n_ != other.n_)
        throw EvalError("selector size mismatch in 'and': " + std::to_string(n_) +
                        " vs " + std::to_string(other.n_));
    Selector out(n_);
    for (size_t i = 0; i < bits_.size(); ++i)
        out.bits_[i] = bits_[i] & other.bits_[i];
    return out;
}

Selector Selector::logical_or(const Selector& other) const {
    if (n_ != other.n_)
        throw EvalError("selector size mismatch in 'or': " + std::to_string(n_) +
                        " vs " + std::to_string(other.n_));
    Selector out(n_);
    for (size_t i = 0; i < bits_.size(); ++i)
        out.bits_[i] = bits_[i] | other.bits_[i];
    return out;
}

Selector Selector::identity(int n) {
    Selector s(n);
    for (int i = 0; i < n; ++i) s.set(i, i, true);
    return s;
}

Selector Selector::full(int n) {
    Selector s(n);
    for (int q = 0; q < n; ++q)
        for (int k = 0; k < n; ++k) s.set(q, k, true);
    return s;
}

bool apply_cmp(Cmp pred, const TokenValue& a, const TokenValue& b, int position) {
    const bool ab = a.kind == Kind::Boolean;
    const bool bb = b.kind == Kind::Boolean;
    if (ab != bb && pred != Cmp::Eq && pred != Cmp::Ne)
        throw EvalError(std::string("order comparison '") + cmp_name(pred) +
                            "' between boolean and numeric operands",
                        position);
    // Exact carrier comparison; the constructions only compare indices and
    // integer-derived values.
    switch (pred) {
        case Cmp::Eq: return a.value == b.value;
        case Cmp::Ne: return a.value != b.value;
        case Cmp::Lt: return a.value < b.value;
        case Cmp::Le: return a.value <= b.value;
        case Cmp::Gt: return a.value > b.value;
        case Cmp::Ge: return a.value >= b.value;
    }
    return false;
}

namespace {

Sequence broadcast(const TokenValue& t, int n) {
    Sequence s;
    s.tokens.assign(static_cast<size_t>(n), t);
    return s;
}

void check_same_length(const Sequence& a, const Sequence& b, const char* what) {
    if (a.length() != b.length())
        throw EvalError(std::string("length mismatch in ") + what + ": " +
                        std::to_string(a.length()) + " vs " + std::to_string(b.length()));
}

// Kind of a derived numeric value: Integer when every contributing operand was
// integral-kinded and the carrier stayed integral, Real otherwise.
TokenValue classify(double v, bool any_real) {
    if (!any_real && TokenValue::is_integral(v)) return TokenValue{Kind::Integer, v};
    return TokenValue::real(v);
}

}  // namespace

Selector select(const Sequence& keys, const Sequence& queries, Cmp pred) {
    check_same_length(keys, queries, "select");
    const int n = keys.length();
    Selector sel(n);
    for (int q = 0; q < n; ++q)
        for (int k = 0; k < n; ++k)
            sel.set(q, k, apply_cmp(pred, keys[k], queries[q], -1));
    return sel;
}

Selector select(const Sequence& keys, const TokenValue& query_scalar, Cmp pred) {
    return select(keys, broadcast(query_scalar, keys.length()), pred);
}

Selector select(const TokenValue& key_scalar, const Sequence& queries, Cmp pred) {
    return select(broadcast(key_scalar, queries.length()), queries, pred);
}

Sequence aggregate(const Selector& sel, const Sequence& values) {
    if (sel.n() != values.length())
        throw EvalError("aggregate dimension mismatch: selector is " +
                        std::to_string(sel.n()) + ", values have length " +
                        std::to_string(values.length()));
    const int n = sel.n();
    Sequence out;
    out.tokens.reserve(static_cast<size_t>(n));
    for (int q = 0; q < n; ++q) {
        double sum = 0.0;
        int count = 0;
        bool any_real = false;
        for (int k = 0; k < n; ++k) {
            if (!sel.at(q, k)) continue;
            sum += values[k].value;
            any_real |= values[k].kind == Kind::Real;
            ++count;
        }
        if (count == 0) {
            out.tokens.push_back(TokenValue::integer(0));  // empty selection
        } else {
            out.tokens.push_back(classify(sum / count, any_real));
        }
    }
    return out;
}

Sequence aggregate(const Selector& sel, const TokenValue& value_scalar) {
    return aggregate(sel, broadcast(value_scalar, sel.n()));
}

Sequence length_sequence(int n) {
    if (n < 1) throw EvalError("sequence length must be >= 1");
    Sequence s;
    s.tokens.assign(static_cast<size_t>(n), TokenValue::integer(n));
    return s;
}

Sequence indices_sequence(int n) {
    if (n < 1) throw EvalError("sequence length must be >= 1");
    Sequence s;
    s.tokens.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) s.tokens.push_back(TokenValue::integer(i));
    return s;
}

namespace {

void require_integral(const TokenValue& t, BinOp op, int pos) {
    if (!TokenValue::is_integral(t.value))
        throw EvalError(std::string("operator '") + binop_name(op) +
                            "' requires integral operands, got " + std::to_string(t.value),
                        pos);
}

double apply_binop(BinOp op, const TokenValue& a, const TokenValue& b, int pos) {
    switch (op) {
        case BinOp::Add: return a.value + b.value;
        case BinOp::Sub: return a.value - b.value;
        case BinOp::Mul: return a.value * b.value;
        case BinOp::Div:
            if (b.value == 0.0) throw EvalError("division by zero", pos);
            return a.value / b.value;
        case BinOp::FloorDiv: {
            require_integral(a, op, pos);
            require_integral(b, op, pos);
            if (b.value == 0.0) throw EvalError("integer division by zero", pos);
            return std::floor(a.value / b.value);
        }
        case BinOp::Mod: {
            require_integral(a, op, pos);
            require_integral(b, op, pos);
            if (b.value == 0.0) throw EvalError("modulo by zero", pos);
            // Floored modulo: result has the sign of the divisor.
            double r = std::fmod(a.value, b.value);
            if (r != 0.0 && (r < 0.0) != (b.value < 0.0)) r += b.value;
            return r;
        }
        case BinOp::Pow: {
            if (a.value < 0.0 && !TokenValue::is_integral(b.value))
                throw EvalError("power of a negative base with a non-integral exponent", pos);
            if (a.value == 0.0 && b.value < 0.0)
                throw EvalError("zero base raised to a negative exponent", pos);
            return std::pow(a.value, b.value);
        }
    }
    return 0.0;
}

}  // namespace

Sequence elementwise(BinOp op, const Sequence& lhs, const Sequence& rhs) {
    check_same_length(lhs, rhs, "elementwise op");
    Sequence out;
    out.tokens.reserve(lhs.tokens.size());
    for (int i = 0; i < lhs.length(); ++i) {
        const bool any_real = lhs[i].kind == Kind::Real || rhs[i].kind == Kind::Real;
        double v = apply_binop(op, lhs[i], rhs[i], i);
        // True division and power always produce Real-kinded tokens.
        if (op == BinOp::Div || op == BinOp::Pow || any_real ||
            !TokenValue::is_integral(v))
            out.tokens.push_back(TokenValue::real(v));
        else
            out.tokens.push_back(TokenValue{Kind::Integer, v});
    }
    return out;
}

Sequence compare(Cmp pred, const Sequence& lhs, const Sequence& rhs) {
    check_same_length(lhs, rhs, "comparison");
    Sequence out;
    out.tokens.reserve(lhs.tokens.size());
    for (int i = 0; i < lhs.length(); ++i)
        out.tokens.push_back(TokenValue::boolean(apply_cmp(pred, lhs[i], rhs[i], i)));
    return out;
}

Sequence negate(const Sequence& s) {
    Sequence out;
    out.tokens.reserve(s.tokens.size());
    for (const auto& t : s.tokens) {
        double v = -t.value;
        out.tokens.push_back(t.kind == Kind::Real ? TokenValue::real(v)
                                                  : TokenValue{Kind::Integer, v});
    }
    return out;
}

Sequence conditional(const Sequence& cond, const Sequence& then_v, const Sequence& else_v) {
    check_same_length(cond, then_v, "conditional");
    check_same_length(cond, else_v, "conditional");
    Sequence out;
    out.tokens.reserve(cond.tokens.size());
    for (int i = 0; i < cond.length(); ++i) {
        if (cond[i].kind != Kind::Boolean)
            throw EvalError("conditional guard must be a boolean sequence", i);
        out.tokens.push_back(cond[i].as_bool() ? then_v[i] : else_v[i]);
    }
    return out;
}

TokenValue to_int_view(const TokenValue& t) {
    return TokenValue{Kind::Integer, std::trunc(t.value)};
}

TokenValue to_float_view(const TokenValue& t) { return TokenValue::real(t.value); }

Sequence int_view(const Sequence& s) {
    Sequence out;
    out.tokens.reserve(s.tokens.size());
    for (const auto& t : s.tokens) out.tokens.push_back(to_int_view(t));
    return out;
}

Sequence float_view(const Sequence& s) {
    Sequence out;
    out.tokens.reserve(s.tokens.size());
    for (const auto& t : s.tokens) out.tokens.push_back(to_float_view(t));
    return out;
}

}  // namespace rasp
