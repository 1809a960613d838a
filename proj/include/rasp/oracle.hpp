#pragma once

#include <nlohmann/json_fwd.hpp>
#include <optional>
#include <string>
#include <vector>

#include "rasp/flatten.hpp"
#include "rasp/rng.hpp"
#include "rasp/token.hpp"

// Independent dense reference implementations used to certify every
// construction. Nothing here shares code with the interpreter or the program
// generators; that independence is the point.
namespace rasp::oracle {

Matrix ref_transpose(const Matrix& m);
Matrix ref_matmul(const Matrix& a, const Matrix& b);

// Row-wise softmax. `stabilized` subtracts the row max before exponentiating.
Matrix ref_softmax_rows(const Matrix& m, bool stabilized = true);

// softmax(X A X^T [/ sqrt(d)]) X V
Matrix ref_softmax_attention(const Matrix& a, const Matrix& v, const Matrix& x,
                             bool scaled = false, bool stabilized = true);

// FFN(softmax(X A X^T) X V) with FFN(Y) = ReLU(Y W1) W2
Matrix ref_encoder(const Matrix& a, const Matrix& v, const Matrix& w1,
                   const Matrix& w2, const Matrix& x, bool scaled = false);

// Per-head attention outputs stacked vertically (the sequence-concatenation
// output convention of the multi-head simulator).
Matrix ref_multi_head(const std::vector<HeadSpec>& heads, const Matrix& x,
                      bool scaled = false);

// (X WQ)(X WK)^T X V, no normalization.
Matrix ref_linear_attention(const Matrix& wq, const Matrix& wk, const Matrix& v,
                            const Matrix& x);

// softmax((X WQ)(E X WK)^T) F X V
Matrix ref_linformer(const Matrix& wq, const Matrix& wk, const Matrix& e,
                     const Matrix& f, const Matrix& v, const Matrix& x);

// Pairwise descending reorder of adjacent elements (ties preserved).
std::vector<double> ref_maxmin(const std::vector<double>& s);

// Rank-3 cofactor matrix, determinant and inverse via minor expansion.
Matrix ref_cofactor3(const Matrix& a);
double ref_det3(const Matrix& a);
Matrix ref_inverse3(const Matrix& a);

// Six-term sign-permutation determinant, exact on integer inputs.
double det3_leibniz(const Matrix& a);

// Second, independent inverse path: Gaussian elimination, partial pivoting.
Matrix gauss_inverse3(const Matrix& a);

// --- Comparison harness -------------------------------------------------------

struct Mismatch {
    int position = 0;
    double expected = 0.0;
    double actual = 0.0;
};

struct ComparisonReport {
    double max_abs_error = 0.0;
    double max_rel_error = 0.0;
    std::optional<Mismatch> first_mismatch;
    bool pass = false;
    double tolerance = 0.0;
    bool exact = false;

    nlohmann::json to_json() const;
};

// Relative error per element, with an absolute fallback below 1e-12
// magnitudes. `exact` demands equal carriers instead.
ComparisonReport compare(const std::vector<double>& expected,
                         const std::vector<double>& actual, double tolerance,
                         bool exact = false);
ComparisonReport compare(const Matrix& expected, const Matrix& actual,
                         double tolerance, bool exact = false);
ComparisonReport compare(const Sequence& expected, const Sequence& actual,
                         double tolerance, bool exact = false);

// --- Seeded instance distributions --------------------------------------------

Matrix random_int_matrix(Rng& rng, int rows, int cols, int lo = -9, int hi = 9);
Matrix random_real_matrix(Rng& rng, int rows, int cols, double lo = -3.0,
                          double hi = 3.0);
// Rejection sampling on |det| < 1e-3.
Matrix random_nonsingular3(Rng& rng, bool integer_entries);

}  // namespace rasp::oracle
