#include "rasp/flatten.hpp"

#include <cmath>
#include <nlohmann/json.hpp>

namespace rasp {

Matrix::Matrix(int r, int c, std::vector<double> d) : rows(r), cols(c), data(std::move(d)) {
    if (rows < 1 || cols < 1)
        throw ContractError("matrix dimensions must be positive");
    if (static_cast<size_t>(rows) * cols != data.size())
        throw ContractError("matrix data length " + std::to_string(data.size()) +
                            " does not match " + std::to_string(rows) + "x" +
                            std::to_string(cols));
}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
}

NdArray::NdArray(std::vector<int> s, std::vector<double> d)
    : shape(std::move(s)), data(std::move(d)) {
    if (shape.empty()) throw ContractError("array must have at least one axis");
    long long len = 1;
    for (int m : shape) {
        if (m < 1) throw ContractError("array axis sizes must be >= 1");
        len *= m;
    }
    if (static_cast<long long>(data.size()) != len)
        throw ContractError("array data length does not match its shape");
}

int NdArray::flat_length() const {
    int len = 1;
    for (int m : shape) len *= m;
    return len;
}

double NdArray::at(const std::vector<int>& index) const {
    return data[static_cast<size_t>(FlatLayout::row_major(shape).flat_index(index))];
}

FlatLayout FlatLayout::row_major(const std::vector<int>& shape) {
    if (shape.empty()) throw ContractError("layout must have at least one axis");
    for (int m : shape)
        if (m < 1) throw ContractError("layout axis sizes must be >= 1");
    FlatLayout l;
    l.shape = shape;
    l.strides.assign(shape.size(), 1);
    for (int i = static_cast<int>(shape.size()) - 2; i >= 0; --i)
        l.strides[static_cast<size_t>(i)] =
            l.strides[static_cast<size_t>(i) + 1] * shape[static_cast<size_t>(i) + 1];
    return l;
}

int FlatLayout::flat_length() const {
    int len = 1;
    for (int m : shape) len *= m;
    return len;
}

int FlatLayout::flat_index(const std::vector<int>& index) const {
    if (index.size() != shape.size())
        throw ContractError("index rank does not match layout rank");
    int flat = 0;
    for (size_t l = 0; l < shape.size(); ++l) {
        if (index[l] < 0 || index[l] >= shape[l])
            throw ContractError("index out of range on axis " + std::to_string(l));
        flat += strides[l] * index[l];
    }
    return flat;
}

void AttentionSpec::validate() const {
    auto check_head = [](const Matrix& A, const Matrix& V, int h) {
        if (A.rows < 1 || V.rows < 1)
            throw ContractError("spec is missing the A or V matrix (head " +
                                std::to_string(h) + ")");
        if (A.rows != A.cols)
            throw ContractError("attention matrix A must be square (head " +
                                std::to_string(h) + ")");
        if (V.rows != A.rows)
            throw ContractError("V.rows (" + std::to_string(V.rows) +
                                ") must equal A.rows (" + std::to_string(A.rows) +
                                ") (head " + std::to_string(h) + ")");
    };
    if (heads.empty()) {
        check_head(a, v, 0);
    } else {
        for (size_t h = 0; h < heads.size(); ++h) {
            check_head(heads[h].a, heads[h].v, static_cast<int>(h));
            if (heads[h].a.rows != heads[0].a.rows || heads[h].v.cols != heads[0].v.cols)
                throw ContractError("all heads must share one (d, d_v) order");
        }
    }
    const int dv = heads.empty() ? v.cols : heads[0].v.cols;
    if (w1 && w1->rows != dv)
        throw ContractError("W1.rows (" + std::to_string(w1->rows) +
                            ") must equal V.cols (" + std::to_string(dv) + ")");
    if (w2) {
        if (!w1) throw ContractError("W2 given without W1");
        if (w2->rows != w1->cols)
            throw ContractError("W2.rows (" + std::to_string(w2->rows) +
                                ") must equal W1.cols (" + std::to_string(w1->cols) + ")");
    }
}

std::pair<Sequence, FlatLayout> flatten(const NdArray& array) {
    FlatLayout layout = FlatLayout::row_major(array.shape);
    return {Sequence::of_numbers(array.data), layout};
}

NdArray unflatten(const Sequence& seq, const FlatLayout& layout) {
    if (seq.length() != layout.flat_length())
        throw ContractError("sequence length " + std::to_string(seq.length()) +
                            " does not match layout length " +
                            std::to_string(layout.flat_length()));
    return NdArray(layout.shape, seq.values());
}

Sequence flatten(const Matrix& m) { return Sequence::of_numbers(m.data); }

Matrix matrix_from_sequence(const Sequence& seq, int rows, int cols) {
    if (seq.length() != rows * cols)
        throw ContractError("sequence length " + std::to_string(seq.length()) +
                            " does not form a " + std::to_string(rows) + "x" +
                            std::to_string(cols) + " matrix");
    return Matrix(rows, cols, seq.values());
}

const Segment& EncodedInput::find(const std::string& name) const {
    for (const auto& s : segments)
        if (s.name == name) return s;
    throw ContractError("no segment named '" + name + "'");
}

Sequence EncodedInput::slice(const std::string& name) const {
    const Segment& s = find(name);
    Sequence out;
    const int len = s.layout.flat_length();
    out.tokens.assign(seq.tokens.begin() + s.offset, seq.tokens.begin() + s.offset + len);
    return out;
}

namespace {

void append_segment(EncodedInput& enc, const std::string& name, const Matrix& m) {
    Segment seg;
    seg.name = name;
    seg.offset = enc.seq.length();
    seg.layout = FlatLayout::row_major({m.rows, m.cols});
    Sequence flat = flatten(m);
    enc.seq.tokens.insert(enc.seq.tokens.end(), flat.tokens.begin(), flat.tokens.end());
    enc.segments.push_back(std::move(seg));
}

}  // namespace

EncodedInput encode_pair(const AttentionSpec& spec, const Matrix& x) {
    spec.validate();
    const int H = spec.head_count();
    const int d = spec.head_a(0).rows;
    if (x.cols != d)
        throw ContractError("X.cols (" + std::to_string(x.cols) +
                            ") must equal A.rows (" + std::to_string(d) + ")");
    EncodedInput enc;
    if (H == 1) {
        append_segment(enc, "X", x);
        append_segment(enc, "A", spec.head_a(0));
        append_segment(enc, "V", spec.head_v(0));
    } else {
        for (int h = 0; h < H; ++h) append_segment(enc, "X@" + std::to_string(h), x);
        for (int h = 0; h < H; ++h)
            append_segment(enc, "A@" + std::to_string(h), spec.head_a(h));
        for (int h = 0; h < H; ++h)
            append_segment(enc, "V@" + std::to_string(h), spec.head_v(h));
    }
    if (spec.w1) append_segment(enc, "W1", *spec.w1);
    if (spec.w2) append_segment(enc, "W2", *spec.w2);
    return enc;
}

Sequence contract(const Sequence& seq, int keep_len) {
    if (keep_len < 0 || keep_len > seq.length())
        throw ContractError("contraction length " + std::to_string(keep_len) +
                            " out of range for sequence of length " +
                            std::to_string(seq.length()));
    for (int i = keep_len; i < seq.length(); ++i)
        if (seq[i].value != 0.0)
            throw ContractError("contraction tail must be zero, found " +
                                std::to_string(seq[i].value) + " at position " +
                                std::to_string(i));
    Sequence out;
    out.tokens.assign(seq.tokens.begin(), seq.tokens.begin() + keep_len);
    return out;
}

EmbeddedInstance embed_pad(const AttentionSpec& spec, const Matrix& x, int n, int d,
                           int dv) {
    spec.validate();
    if (spec.head_count() != 1)
        throw ContractError("padding embedding is defined for single-head specs");
    const int m = x.rows, e = spec.a.rows, ev = spec.v.cols;
    if (n < m || d < e || dv < ev)
        throw ContractError("host order (" + std::to_string(n) + "," + std::to_string(d) +
                            "," + std::to_string(dv) + ") must dominate (" +
                            std::to_string(m) + "," + std::to_string(e) + "," +
                            std::to_string(ev) + ")");
    EmbeddedInstance out;
    out.x = Matrix(n, d);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < e; ++j) out.x.at(i, j) = x.at(i, j);
    Matrix A(d, d);
    for (int i = 0; i < e; ++i)
        for (int j = 0; j < e; ++j) A.at(i, j) = spec.a.at(i, j);
    for (int i = e; i < d; ++i) A.at(i, i) = 1.0;  // identity block
    Matrix V(d, dv);
    for (int i = 0; i < e; ++i)
        for (int j = 0; j < ev; ++j) V.at(i, j) = spec.v.at(i, j);
    out.spec.a = std::move(A);
    out.spec.v = std::move(V);
    return out;
}

int infer_dims(int n, int flat_length) {
    // d^2 + n d - L = 0  =>  d = (-n + sqrt(n^2 + 4L)) / 2
    const double disc = static_cast<double>(n) * n + 4.0 * flat_length;
    const int d = static_cast<int>(std::llround((-n + std::sqrt(disc)) / 2.0));
    if (d < 1 || d * d + n * d != flat_length)
        throw ContractError("no model dimension d satisfies d^2 + " + std::to_string(n) +
                            "*d == " + std::to_string(flat_length));
    return d;
}

using json = nlohmann::json;

json matrix_to_json(const Matrix& m) {
    return json{{"rows", m.rows}, {"cols", m.cols}, {"data", m.data}};
}

Matrix matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("data"))
        throw ContractError("matrix JSON must be {\"rows\", \"cols\", \"data\"}");
    return Matrix(j.at("rows").get<int>(), j.at("cols").get<int>(),
                  j.at("data").get<std::vector<double>>());
}

json sequence_to_json(const Sequence& s) {
    json arr = json::array();
    for (const auto& t : s.tokens) {
        switch (t.kind) {
            case Kind::Boolean: arr.push_back(t.value != 0.0); break;
            case Kind::Integer: arr.push_back(static_cast<long long>(t.value)); break;
            case Kind::Real: arr.push_back(t.value); break;
        }
    }
    return arr;
}

Sequence sequence_from_json(const json& j) {
    if (!j.is_array()) throw ContractError("sequence JSON must be an array");
    Sequence s;
    s.tokens.reserve(j.size());
    for (const auto& v : j) {
        if (v.is_boolean())
            s.tokens.push_back(TokenValue::boolean(v.get<bool>()));
        else if (v.is_number_integer() || v.is_number_unsigned())
            s.tokens.push_back(TokenValue::integer(static_cast<double>(v.get<long long>())));
        else if (v.is_number_float())
            s.tokens.push_back(TokenValue::real(v.get<double>()));
        else
            throw ContractError("sequence tokens must be numbers or booleans");
    }
    return s;
}

AttentionSpec spec_from_json(const json& j) {
    AttentionSpec spec;
    if (j.contains("heads")) {
        for (const auto& h : j.at("heads"))
            spec.heads.push_back(HeadSpec{matrix_from_json(h.at("A")),
                                          matrix_from_json(h.at("V"))});
        if (spec.heads.empty()) throw ContractError("'heads' must be non-empty");
        spec.a = spec.heads[0].a;
        spec.v = spec.heads[0].v;
    } else {
        if (j.contains("A")) spec.a = matrix_from_json(j.at("A"));
        if (j.contains("V")) spec.v = matrix_from_json(j.at("V"));
    }
    if (j.contains("W1")) spec.w1 = matrix_from_json(j.at("W1"));
    if (j.contains("W2")) spec.w2 = matrix_from_json(j.at("W2"));
    if (j.contains("WQ")) spec.wq = matrix_from_json(j.at("WQ"));
    if (j.contains("WK")) spec.wk = matrix_from_json(j.at("WK"));
    if (j.contains("E")) spec.e = matrix_from_json(j.at("E"));
    if (j.contains("F")) spec.f = matrix_from_json(j.at("F"));
    return spec;
}

}  // namespace rasp
