#pragma once

#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "rene/geometry.hpp"

namespace rene::script {

enum class TokenKind { Ident, Number, Punct, Keyword, Eof };

struct Token {
    TokenKind kind;
    std::string text;
    SourcePos pos;
};

/// Longest-match tokenization. `#` starts a comment to end of line; numbers
/// are digits optionally followed by `/` digits; puncts are
/// ( ) , ; = == != + - * / ^. Throws LexError on anything else.
std::vector<Token> tokenize(std::string_view source);

struct AstNode {
    enum class Kind {
        Script,   // children: statements
        VarsDecl, // names: declared indeterminates
        Assign,   // name, children[0]: value
        Assert,   // op: '=' for ==, '!' for !=; children: lhs, rhs
        Show,     // children[0]
        Call,     // name, children: arguments
        Ident,    // name
        Number,   // number
        BinOp,    // op: + - * / ^; children: lhs, rhs
        Neg,      // children[0]
        Tuple,    // children: x, y (point literal)
    };

    Kind kind;
    SourcePos pos;
    std::string name;
    std::vector<std::string> names;
    Rational number;
    char op = 0;
    std::vector<AstNode> children;
};

/// Recursive-descent parse of a whole script. Throws ParseError.
AstNode parse(const std::vector<Token>& tokens);

/// Parses a single expression (the whole text must be consumed).
AstNode parse_expression(std::string_view source);

using Value = std::variant<RatFunc, Point, Triangle>;

std::string value_str(const Value& v);

/// Name bindings for one interpretation run. Indeterminate names and bound
/// names stay disjoint; the table freezes at the first non-vars statement.
struct Environment {
    VarTablePtr table; // null until frozen
    std::map<std::string, Value, std::less<>> bindings;
};

struct RunEvent {
    enum class Kind { Assert, Show };
    Kind kind;
    int line = 0;
    bool passed = false; // asserts only
    std::string text;    // shows only
};

struct RunReport {
    std::vector<RunEvent> events;
    bool all_asserts_passed() const;
};

/// Executes statements in order. Script errors and kernel errors surface as
/// ScriptError subclasses carrying source positions.
RunReport interpret(const AstNode& script, Environment& env);
RunReport interpret(const AstNode& script);

Value eval_expression(const AstNode& expr, Environment& env);

/// Parses and evaluates expression text against a fixed table; the result
/// must be a scalar rational function.
RatFunc eval_ratfunc_text(std::string_view source, const VarTablePtr& table);

} // namespace rene::script
