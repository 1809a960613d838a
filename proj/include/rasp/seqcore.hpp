#pragma once

#include <string>
#include <vector>

#include "rasp/token.hpp"

namespace rasp {

// Comparison predicates usable in select() and elementwise comparisons.
enum class Cmp : uint8_t { Eq, Ne, Lt, Le, Gt, Ge };

const char* cmp_name(Cmp c);

// n x n boolean attention pattern. Row index = query position, column index =
// key position: bits(q, k) == predicate(keys[k], queries[q]).
class Selector {
public:
    Selector() = default;
    explicit Selector(int n) : n_(n), bits_(static_cast<size_t>(n) * n, 0) {}

    int n() const { return n_; }
    bool at(int q, int k) const { return bits_[idx(q, k)] != 0; }
    void set(int q, int k, bool v) { bits_[idx(q, k)] = v ? 1 : 0; }

    Selector logical_and(const Selector& other) const;
    Selector logical_or(const Selector& other) const;

    static Selector identity(int n);
    static Selector full(int n);

    friend bool operator==(const Selector& a, const Selector& b) {
        return a.n_ == b.n_ && a.bits_ == b.bits_;
    }

private:
    size_t idx(int q, int k) const {
        return static_cast<size_t>(q) * n_ + static_cast<size_t>(k);
    }
    int n_ = 0;
    std::vector<uint8_t> bits_;
};

// --- Non-elementwise primitives (average-hard attention semantics) ---------

// bits(q, k) = predicate(keys[k], queries[q]). Scalar operands broadcast.
Selector select(const Sequence& keys, const Sequence& queries, Cmp pred);
Selector select(const Sequence& keys, const TokenValue& query_scalar, Cmp pred);
Selector select(const TokenValue& key_scalar, const Sequence& queries, Cmp pred);

// output[q] = mean of values[k] over selected k; 0 when row q selects nothing.
Sequence aggregate(const Selector& sel, const Sequence& values);
Sequence aggregate(const Selector& sel, const TokenValue& value_scalar);

// Constant sequence of n copies of n.
Sequence length_sequence(int n);

// [0, 1, ..., n-1]
Sequence indices_sequence(int n);

// --- Elementwise operations -------------------------------------------------

enum class BinOp : uint8_t { Add, Sub, Mul, Div, FloorDiv, Mod, Pow };

const char* binop_name(BinOp op);

Sequence elementwise(BinOp op, const Sequence& lhs, const Sequence& rhs);
Sequence compare(Cmp pred, const Sequence& lhs, const Sequence& rhs);
Sequence negate(const Sequence& s);
// out[i] = cond[i] ? then_v[i] : else_v[i]; cond must be boolean-kind.
Sequence conditional(const Sequence& cond, const Sequence& then_v, const Sequence& else_v);

// Scalar comparison used by both select() and compare(); errors on an order
// comparison between a boolean and a numeric operand.
bool apply_cmp(Cmp pred, const TokenValue& a, const TokenValue& b, int position);

// Token views.
TokenValue to_int_view(const TokenValue& t);    // truncate toward zero
TokenValue to_float_view(const TokenValue& t);  // same carrier, Real kind
Sequence int_view(const Sequence& s);
Sequence float_view(const Sequence& s);

}  // namespace rasp
