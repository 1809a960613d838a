#pragma once

#include <stdexcept>
#include <string>

namespace rasp {

// Location inside a .rasp source file, 1-based. {0,0} means "no location".
struct SourceLoc {
    int line = 0;
    int col = 0;
};

// Syntax errors from the lexer/parser.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, SourceLoc loc)
        : std::runtime_error(format(msg, loc)), loc_(loc) {}
    SourceLoc loc() const { return loc_; }

private:
    static std::string format(const std::string& msg, SourceLoc loc) {
        if (loc.line == 0) return msg;
        return msg + " (line " + std::to_string(loc.line) + ", col " +
               std::to_string(loc.col) + ")";
    }
    SourceLoc loc_;
};

// Runtime errors from sequence semantics or the evaluator. `position` is the
// token index the failure was detected at, or -1 when not position-specific.
class EvalError : public std::runtime_error {
public:
    explicit EvalError(const std::string& msg, int position = -1, SourceLoc loc = {})
        : std::runtime_error(format(msg, position, loc)),
          raw_(msg),
          position_(position),
          loc_(loc) {}
    int position() const { return position_; }
    SourceLoc loc() const { return loc_; }
    const std::string& raw_message() const { return raw_; }

    EvalError with_loc(SourceLoc loc) const {
        return EvalError(raw_, position_, loc);
    }

private:
    static std::string format(const std::string& msg, int position, SourceLoc loc) {
        std::string out = msg;
        if (position >= 0) out += " at position " + std::to_string(position);
        if (loc.line != 0)
            out += " (line " + std::to_string(loc.line) + ", col " +
                   std::to_string(loc.col) + ")";
        return out;
    }
    std::string raw_;
    int position_;
    SourceLoc loc_;
};

// Violated input/output contract of a generated program or pipeline stage.
class ContractError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace rasp
