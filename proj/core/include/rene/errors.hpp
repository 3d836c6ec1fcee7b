#pragma once

#include <stdexcept>
#include <string>

namespace rene {

/// Base class for every error raised by the kernel.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ZeroDenominator : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public Error {
public:
    using Error::Error;
};

class TableMismatch : public Error {
public:
    using Error::Error;
};

class MissingBinding : public Error {
public:
    using Error::Error;
};

class InexactDivision : public Error {
public:
    using Error::Error;
};

class PoleAtPoint : public Error {
public:
    using Error::Error;
};

class DegenerateConstruction : public Error {
public:
    using Error::Error;
};

class ConjugateAtInfinity : public Error {
public:
    using Error::Error;
};

/// 1-based position inside a script source.
struct SourcePos {
    int line = 1;
    int col = 1;
};

/// Errors produced while processing a script; they carry the source position
/// of the offending token or construct.
class ScriptError : public Error {
public:
    ScriptError(const std::string& kind, SourcePos pos, const std::string& msg)
        : Error(kind + " at " + std::to_string(pos.line) + ":" +
                std::to_string(pos.col) + ": " + msg),
          pos_(pos) {}

    SourcePos pos() const { return pos_; }

private:
    SourcePos pos_;
};

class LexError : public ScriptError {
public:
    LexError(SourcePos pos, const std::string& msg)
        : ScriptError("lex error", pos, msg) {}
};

class ParseError : public ScriptError {
public:
    ParseError(SourcePos pos, const std::string& msg)
        : ScriptError("parse error", pos, msg) {}
};

class TypeError : public ScriptError {
public:
    TypeError(SourcePos pos, const std::string& msg)
        : ScriptError("type error", pos, msg) {}
};

class NameError : public ScriptError {
public:
    NameError(SourcePos pos, const std::string& msg)
        : ScriptError("name error", pos, msg) {}
};

/// Wraps a non-script kernel error (pole, degeneracy, ...) raised while a
/// script statement was being evaluated, attaching the source position.
class EvalError : public ScriptError {
public:
    EvalError(SourcePos pos, const std::string& msg)
        : ScriptError("evaluation error", pos, msg) {}
};

} // namespace rene
