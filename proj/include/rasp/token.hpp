#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "rasp/error.hpp"

namespace rasp {

// Value kinds carried by a token. All values share one 64-bit real carrier;
// booleans are 0/1 and integers must be integral with magnitude < 2^53.
enum class Kind : uint8_t { Boolean, Integer, Real };

struct TokenValue {
    Kind kind = Kind::Real;
    double value = 0.0;

    static TokenValue boolean(bool b) { return {Kind::Boolean, b ? 1.0 : 0.0}; }
    static TokenValue integer(double v) {
        if (!is_integral(v))
            throw EvalError("integer token requires an integral carrier");
        return {Kind::Integer, v};
    }
    static TokenValue real(double v) { return {Kind::Real, v}; }

    // Integral carrier with |v| < 2^53 (exactly representable range).
    static bool is_integral(double v) {
        return std::isfinite(v) && std::nearbyint(v) == v &&
               std::fabs(v) < 9007199254740992.0;
    }

    bool is_numeric() const { return kind != Kind::Boolean; }
    bool as_bool() const { return value != 0.0; }

    friend bool operator==(const TokenValue& a, const TokenValue& b) {
        return a.kind == b.kind && a.value == b.value;
    }
};

// Equal-length token streams are the only value RASP programs produce; every
// operation is length-preserving.
struct Sequence {
    std::vector<TokenValue> tokens;

    Sequence() = default;
    explicit Sequence(std::vector<TokenValue> t) : tokens(std::move(t)) {}

    int length() const { return static_cast<int>(tokens.size()); }
    const TokenValue& operator[](int i) const { return tokens[static_cast<size_t>(i)]; }
    TokenValue& operator[](int i) { return tokens[static_cast<size_t>(i)]; }

    static Sequence of_integers(const std::vector<double>& vals) {
        Sequence s;
        s.tokens.reserve(vals.size());
        for (double v : vals) s.tokens.push_back(TokenValue::integer(v));
        return s;
    }
    static Sequence of_reals(const std::vector<double>& vals) {
        Sequence s;
        s.tokens.reserve(vals.size());
        for (double v : vals) s.tokens.push_back(TokenValue::real(v));
        return s;
    }
    // Integral carriers become Integer tokens, everything else Real.
    static Sequence of_numbers(const std::vector<double>& vals) {
        Sequence s;
        s.tokens.reserve(vals.size());
        for (double v : vals)
            s.tokens.push_back(TokenValue::is_integral(v) ? TokenValue::integer(v)
                                                          : TokenValue::real(v));
        return s;
    }

    std::vector<double> values() const {
        std::vector<double> out;
        out.reserve(tokens.size());
        for (const auto& t : tokens) out.push_back(t.value);
        return out;
    }

    friend bool operator==(const Sequence& a, const Sequence& b) {
        return a.tokens == b.tokens;
    }
};

}  // namespace rasp
