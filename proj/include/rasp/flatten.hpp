#pragma once

#include <nlohmann/json_fwd.hpp>
#include <optional>
#include <string>
#include <vector>

#include "rasp/token.hpp"

namespace rasp {

// Dense real matrix, row-major.
struct Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * c, 0.0) {}
    Matrix(int r, int c, std::vector<double> d);

    double& at(int i, int j) { return data[static_cast<size_t>(i) * cols + j]; }
    double at(int i, int j) const { return data[static_cast<size_t>(i) * cols + j]; }
    int size() const { return rows * cols; }

    static Matrix identity(int n);

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows == b.rows && a.cols == b.cols && a.data == b.data;
    }
};

// n-dimensional real array, row-major.
struct NdArray {
    std::vector<int> shape;
    std::vector<double> data;

    NdArray() = default;
    NdArray(std::vector<int> s, std::vector<double> d);

    int flat_length() const;
    double at(const std::vector<int>& index) const;

    friend bool operator==(const NdArray& a, const NdArray& b) {
        return a.shape == b.shape && a.data == b.data;
    }
};

// Shape <-> flat-index mapping: element (i_0, ..., i_{m-1}) lives at
// sum_l strides[l] * i_l, with row-major strides strides[l] = prod_{j>l} shape[j].
struct FlatLayout {
    std::vector<int> shape;
    std::vector<int> strides;

    static FlatLayout row_major(const std::vector<int>& shape);
    int flat_length() const;
    int flat_index(const std::vector<int>& index) const;
};

// The matrix bundle characterizing a transformer under simulation. `a` and `v`
// are the attention and value matrices; `w1`/`w2` the optional feed-forward
// projections; `heads` the per-head (A, V) list when simulating multi-head
// attention; `wq`/`wk` and `e`/`f` parameterize the linear and Linformer
// variants.
struct HeadSpec {
    Matrix a;
    Matrix v;
};

struct AttentionSpec {
    Matrix a;
    Matrix v;
    std::optional<Matrix> w1;
    std::optional<Matrix> w2;
    std::vector<HeadSpec> heads;  // empty => single head given by a/v
    std::optional<Matrix> wq;
    std::optional<Matrix> wk;
    std::optional<Matrix> e;
    std::optional<Matrix> f;

    int head_count() const { return heads.empty() ? 1 : static_cast<int>(heads.size()); }
    const Matrix& head_a(int h) const { return heads.empty() ? a : heads[static_cast<size_t>(h)].a; }
    const Matrix& head_v(int h) const { return heads.empty() ? v : heads[static_cast<size_t>(h)].v; }

    // Checks the dimension relations between A, V, W1, W2 and all heads.
    void validate() const;
};

// --- Proposition-1 machinery -----------------------------------------------

std::pair<Sequence, FlatLayout> flatten(const NdArray& array);
NdArray unflatten(const Sequence& seq, const FlatLayout& layout);

Sequence flatten(const Matrix& m);
Matrix matrix_from_sequence(const Sequence& seq, int rows, int cols);

// --- <T, X> input encoding ---------------------------------------------------

struct Segment {
    std::string name;
    int offset = 0;
    FlatLayout layout;
};

struct EncodedInput {
    Sequence seq;
    std::vector<Segment> segments;

    const Segment& find(const std::string& name) const;
    Sequence slice(const std::string& name) const;
};

// Single head:  flatten(X) || flatten(A) || flatten(V) [|| W1 || W2]
// Multi-head:   (||_h X^h) || (||_h A^h) || (||_h V^h) [|| W1 || W2]
// X is replicated across heads when the spec is multi-head.
EncodedInput encode_pair(const AttentionSpec& spec, const Matrix& x);

// Keeps the first `keep_len` tokens; the tail must be exactly zero (the
// feed-forward contraction W[i][j] = 1 iff i == j and i <= keep_len).
Sequence contract(const Sequence& seq, int keep_len);

// Appendix-style padding embedding of an (m, e, e_v) instance into an
// (n, d, d_v) host: X zero-padded, A extended block-diagonally with an
// identity, V zero-padded.
struct EmbeddedInstance {
    AttentionSpec spec;
    Matrix x;
};
EmbeddedInstance embed_pad(const AttentionSpec& spec, const Matrix& x, int n, int d,
                           int dv);

// Solves d^2 + n*d == flat_length for the model dimension; valid only when
// d == d_v so that the X||A block length determines d.
int infer_dims(int n, int flat_length);

// --- JSON interchange ---------------------------------------------------------

nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j);
nlohmann::json sequence_to_json(const Sequence& s);
Sequence sequence_from_json(const nlohmann::json& j);
AttentionSpec spec_from_json(const nlohmann::json& j);

}  // namespace rasp
