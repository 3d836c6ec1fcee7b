#include "rene/script.hpp"

namespace rene::script {

namespace {

// script := stmt*
// stmt   := 'vars' ident (',' ident)* ';'
//         | ident '=' expr ';'
//         | 'assert' expr ('==' | '!=') expr ';'
//         | 'show' expr ';'
// expr   := additive; the usual precedence ladder with right-associative '^'
//           binding tightest, then unary '-', then '*' '/', then '+' '-'.
// primary := NUMBER | ident ['(' args ')'] | '(' expr [',' expr] ')'
class Parser {
public:
    explicit Parser(const std::vector<Token>& tokens) : toks_(tokens) {}

    AstNode script() {
        AstNode root{AstNode::Kind::Script, peek().pos, {}, {}, {}, 0, {}};
        while (peek().kind != TokenKind::Eof) {
            root.children.push_back(statement());
        }
        return root;
    }

    AstNode expression_only() {
        AstNode e = expr();
        expect_eof();
        return e;
    }

private:
    const Token& peek(std::size_t ahead = 0) const {
        const std::size_t i = pos_ + ahead;
        return i < toks_.size() ? toks_[i] : toks_.back();
    }

    const Token& advance() { return toks_[pos_++]; }

    bool at_punct(std::string_view text) const {
        return peek().kind == TokenKind::Punct && peek().text == text;
    }

    bool at_keyword(std::string_view text) const {
        return peek().kind == TokenKind::Keyword && peek().text == text;
    }

    [[noreturn]] void fail(const std::string& expected) const {
        const Token& t = peek();
        const std::string found =
            t.kind == TokenKind::Eof ? "end of input" : "'" + t.text + "'";
        throw ParseError(t.pos, "expected " + expected + ", found " + found);
    }

    Token expect_punct(std::string_view text) {
        if (!at_punct(text)) fail("'" + std::string(text) + "'");
        return advance();
    }

    Token expect_ident() {
        if (peek().kind != TokenKind::Ident) fail("identifier");
        return advance();
    }

    void expect_eof() {
        if (peek().kind != TokenKind::Eof) fail("end of input");
    }

    AstNode statement() {
        const Token& t = peek();
        if (at_keyword("vars")) return vars_decl();
        if (at_keyword("assert")) return assert_stmt();
        if (at_keyword("show")) return show_stmt();
        if (t.kind == TokenKind::Ident) return assign_stmt();
        fail("a statement ('vars', 'assert', 'show' or an assignment)");
    }

    AstNode vars_decl() {
        AstNode node{AstNode::Kind::VarsDecl, advance().pos, {}, {}, {}, 0, {}};
        node.names.push_back(expect_ident().text);
        while (at_punct(",")) {
            advance();
            node.names.push_back(expect_ident().text);
        }
        expect_punct(";");
        return node;
    }

    AstNode assign_stmt() {
        Token name = advance();
        AstNode node{AstNode::Kind::Assign, name.pos, std::move(name.text), {}, {}, 0, {}};
        expect_punct("=");
        node.children.push_back(expr());
        expect_punct(";");
        return node;
    }

    AstNode assert_stmt() {
        AstNode node{AstNode::Kind::Assert, advance().pos, {}, {}, {}, 0, {}};
        node.children.push_back(expr());
        if (at_punct("==")) {
            node.op = '=';
        } else if (at_punct("!=")) {
            node.op = '!';
        } else {
            fail("'==' or '!='");
        }
        advance();
        node.children.push_back(expr());
        expect_punct(";");
        return node;
    }

    AstNode show_stmt() {
        AstNode node{AstNode::Kind::Show, advance().pos, {}, {}, {}, 0, {}};
        node.children.push_back(expr());
        expect_punct(";");
        return node;
    }

    AstNode expr() { return additive(); }

    AstNode additive() {
        AstNode lhs = multiplicative();
        while (at_punct("+") || at_punct("-")) {
            Token op = advance();
            AstNode rhs = multiplicative();
            lhs = binop(op, std::move(lhs), std::move(rhs));
        }
        return lhs;
    }

    AstNode multiplicative() {
        AstNode lhs = unary();
        while (at_punct("*") || at_punct("/")) {
            Token op = advance();
            AstNode rhs = unary();
            lhs = binop(op, std::move(lhs), std::move(rhs));
        }
        return lhs;
    }

    AstNode unary() {
        if (at_punct("-")) {
            Token minus = advance();
            AstNode node{AstNode::Kind::Neg, minus.pos, {}, {}, {}, 0, {}};
            node.children.push_back(unary());
            return node;
        }
        return power();
    }

    AstNode power() {
        AstNode base = primary();
        if (at_punct("^")) {
            Token op = advance();
            AstNode exp = unary(); // right-associative; allows m^-2, m^2^3
            return binop(op, std::move(base), std::move(exp));
        }
        return base;
    }

    AstNode primary() {
        const Token& t = peek();
        if (t.kind == TokenKind::Number) {
            Token num = advance();
            AstNode node{AstNode::Kind::Number, num.pos, {}, {}, Rational::parse(num.text), 0, {}};
            return node;
        }
        if (t.kind == TokenKind::Ident) {
            Token name = advance();
            if (at_punct("(")) {
                AstNode call{AstNode::Kind::Call, name.pos, std::move(name.text), {}, {}, 0, {}};
                advance();
                if (!at_punct(")")) {
                    call.children.push_back(expr());
                    while (at_punct(",")) {
                        advance();
                        call.children.push_back(expr());
                    }
                }
                expect_punct(")");
                return call;
            }
            return AstNode{AstNode::Kind::Ident, name.pos, std::move(name.text), {}, {}, 0, {}};
        }
        if (at_punct("(")) {
            Token open = advance();
            AstNode first = expr();
            if (at_punct(",")) {
                advance();
                AstNode second = expr();
                expect_punct(")");
                AstNode tuple{AstNode::Kind::Tuple, open.pos, {}, {}, {}, 0, {}};
                tuple.children.push_back(std::move(first));
                tuple.children.push_back(std::move(second));
                return tuple;
            }
            expect_punct(")");
            return first;
        }
        fail("an expression");
    }

    static AstNode binop(const Token& op, AstNode lhs, AstNode rhs) {
        AstNode node{AstNode::Kind::BinOp, op.pos, {}, {}, {}, op.text[0], {}};
        node.children.push_back(std::move(lhs));
        node.children.push_back(std::move(rhs));
        return node;
    }

    const std::vector<Token>& toks_;
    std::size_t pos_ = 0;
};

} // namespace

AstNode parse(const std::vector<Token>& tokens) { return Parser(tokens).script(); }

AstNode parse_expression(std::string_view source) {
    auto tokens = tokenize(source);
    return Parser(tokens).expression_only();
}

} // namespace rene::script
