#include "rene/script.hpp"

#include <algorithm>
#include <array>
#include <functional>

namespace rene::script {

namespace {

const char* kind_name(const Value& v) {
    switch (v.index()) {
        case 0: return "scalar";
        case 1: return "point";
        default: return "triangle";
    }
}

const std::array<std::string_view, 10> kBuiltins = {
    "Te",      "vertex",          "point",   "isogonal",     "deSq",
    "reflect", "circumradiusSq", "circumcenter", "collinearDet", "concyclicDet"};

bool is_builtin(std::string_view name) {
    return std::find(kBuiltins.begin(), kBuiltins.end(), name) != kBuiltins.end();
}

const RatFunc& as_scalar(const Value& v, const AstNode& where, const char* what) {
    if (const auto* rf = std::get_if<RatFunc>(&v)) return *rf;
    throw TypeError(where.pos,
                    std::string(what) + " expects a scalar, got a " + kind_name(v));
}

const Point& as_point(const Value& v, const AstNode& where, const char* what) {
    if (const auto* p = std::get_if<Point>(&v)) return *p;
    throw TypeError(where.pos,
                    std::string(what) + " expects a point, got a " + kind_name(v));
}

const Triangle& as_triangle(const Value& v, const AstNode& where, const char* what) {
    if (const auto* t = std::get_if<Triangle>(&v)) return *t;
    throw TypeError(where.pos,
                    std::string(what) + " expects a triangle, got a " + kind_name(v));
}

void require_arity(const AstNode& call, std::size_t arity) {
    if (call.children.size() != arity) {
        throw TypeError(call.pos, "'" + call.name + "' expects " + std::to_string(arity) +
                                      " argument(s), got " +
                                      std::to_string(call.children.size()));
    }
}

Value eval_call(const AstNode& call, Environment& env,
                const std::vector<Value>& args) {
    const std::string& f = call.name;
    if (f == "Te") {
        require_arity(call, 2);
        return te(as_scalar(args[0], call, "Te"), as_scalar(args[1], call, "Te"));
    }
    if (f == "vertex") {
        require_arity(call, 2);
        const Triangle& t = as_triangle(args[0], call, "vertex");
        auto idx = as_scalar(args[1], call, "vertex").as_constant();
        if (!idx || !idx->is_integer()) {
            throw TypeError(call.pos, "vertex index must be an integer constant");
        }
        if (*idx == Rational(1)) return t.v1();
        if (*idx == Rational(2)) return t.v2();
        if (*idx == Rational(3)) return t.v3();
        throw TypeError(call.pos, "vertex index must be 1, 2, or 3");
    }
    if (f == "point") {
        require_arity(call, 2);
        return Point(as_scalar(args[0], call, "point"), as_scalar(args[1], call, "point"));
    }
    if (f == "isogonal") {
        if (args.size() == 2) {
            return isogonal_conjugate(as_triangle(args[0], call, "isogonal"),
                                      as_point(args[1], call, "isogonal"));
        }
        if (args.size() == 4) {
            Triangle t(as_point(args[0], call, "isogonal"),
                       as_point(args[1], call, "isogonal"),
                       as_point(args[2], call, "isogonal"));
            return isogonal_conjugate(t, as_point(args[3], call, "isogonal"));
        }
        throw TypeError(call.pos, "'isogonal' expects (triangle, point) or four points");
    }
    if (f == "deSq") {
        require_arity(call, 2);
        return de_sq(as_point(args[0], call, "deSq"), as_point(args[1], call, "deSq"));
    }
    if (f == "circumcenter" || f == "circumradiusSq") {
        require_arity(call, 3);
        const Point& p1 = as_point(args[0], call, f.c_str());
        const Point& p2 = as_point(args[1], call, f.c_str());
        const Point& p3 = as_point(args[2], call, f.c_str());
        if (f == "circumcenter") return circumcenter(p1, p2, p3);
        return circumradius_sq(p1, p2, p3);
    }
    if (f == "reflect") {
        require_arity(call, 3);
        return reflect_over_line(as_point(args[0], call, "reflect"),
                                 as_point(args[1], call, "reflect"),
                                 as_point(args[2], call, "reflect"));
    }
    if (f == "collinearDet") {
        require_arity(call, 3);
        return collinear_det(as_point(args[0], call, "collinearDet"),
                             as_point(args[1], call, "collinearDet"),
                             as_point(args[2], call, "collinearDet"));
    }
    if (f == "concyclicDet") {
        require_arity(call, 4);
        return concyclic_det(as_point(args[0], call, "concyclicDet"),
                             as_point(args[1], call, "concyclicDet"),
                             as_point(args[2], call, "concyclicDet"),
                             as_point(args[3], call, "concyclicDet"));
    }
    throw NameError(call.pos, "unknown function '" + f + "'");
}

bool values_equal(const Value& lhs, const Value& rhs, const AstNode& where) {
    if (lhs.index() != rhs.index()) {
        throw TypeError(where.pos, std::string("cannot compare a ") + kind_name(lhs) +
                                       " with a " + kind_name(rhs));
    }
    if (const auto* a = std::get_if<RatFunc>(&lhs)) {
        return *a == std::get<RatFunc>(rhs);
    }
    if (const auto* a = std::get_if<Point>(&lhs)) {
        return *a == std::get<Point>(rhs);
    }
    const Triangle& a = std::get<Triangle>(lhs);
    const Triangle& b = std::get<Triangle>(rhs);
    return a.v1() == b.v1() && a.v2() == b.v2() && a.v3() == b.v3();
}

} // namespace

std::string value_str(const Value& v) {
    if (const auto* rf = std::get_if<RatFunc>(&v)) return rf->str();
    if (const auto* p = std::get_if<Point>(&v)) return p->str();
    const Triangle& t = std::get<Triangle>(v);
    return "{" + t.v1().str() + ", " + t.v2().str() + ", " + t.v3().str() + "}";
}

Value eval_expression(const AstNode& node, Environment& env) {
    switch (node.kind) {
        case AstNode::Kind::Number:
            return RatFunc::constant(env.table, node.number);
        case AstNode::Kind::Ident: {
            if (auto idx = env.table->index(node.name)) {
                return RatFunc::variable(env.table, *idx);
            }
            if (auto it = env.bindings.find(node.name); it != env.bindings.end()) {
                return it->second;
            }
            throw NameError(node.pos, "unbound identifier '" + node.name + "'");
        }
        case AstNode::Kind::Neg: {
            Value v = eval_expression(node.children[0], env);
            return -as_scalar(v, node, "unary '-'");
        }
        case AstNode::Kind::Tuple: {
            Value x = eval_expression(node.children[0], env);
            Value y = eval_expression(node.children[1], env);
            return Point(as_scalar(x, node, "point literal"),
                         as_scalar(y, node, "point literal"));
        }
        case AstNode::Kind::BinOp: {
            Value lv = eval_expression(node.children[0], env);
            const RatFunc& lhs = as_scalar(lv, node.children[0], "arithmetic");
            if (node.op == '^') {
                Value rv = eval_expression(node.children[1], env);
                auto e = as_scalar(rv, node.children[1], "'^'").as_constant();
                if (!e || !e->is_integer()) {
                    throw TypeError(node.children[1].pos, "exponent must be an integer constant");
                }
                try {
                    return lhs.pow(e->num().convert_to<long long>());
                } catch (const ScriptError&) {
                    throw;
                } catch (const Error& err) {
                    throw EvalError(node.pos, err.what());
                }
            }
            Value rv = eval_expression(node.children[1], env);
            const RatFunc& rhs = as_scalar(rv, node.children[1], "arithmetic");
            try {
                switch (node.op) {
                    case '+': return lhs + rhs;
                    case '-': return lhs - rhs;
                    case '*': return lhs * rhs;
                    default: return lhs / rhs;
                }
            } catch (const ScriptError&) {
                throw;
            } catch (const Error& err) {
                throw EvalError(node.pos, err.what());
            }
        }
        case AstNode::Kind::Call: {
            std::vector<Value> args;
            args.reserve(node.children.size());
            for (const AstNode& child : node.children) {
                args.push_back(eval_expression(child, env));
            }
            try {
                return eval_call(node, env, args);
            } catch (const ScriptError&) {
                throw;
            } catch (const Error& err) {
                throw EvalError(node.pos, err.what());
            }
        }
        default:
            throw Error("statement node in expression position");
    }
}

bool RunReport::all_asserts_passed() const {
    return std::all_of(events.begin(), events.end(), [](const RunEvent& e) {
        return e.kind != RunEvent::Kind::Assert || e.passed;
    });
}

RunReport interpret(const AstNode& script, Environment& env) {
    if (script.kind != AstNode::Kind::Script) {
        throw Error("interpret expects a script root node");
    }
    RunReport report;
    std::vector<std::string> pending;
    const bool table_preset = env.table != nullptr;

    for (const AstNode& stmt : script.children) {
        if (stmt.kind == AstNode::Kind::VarsDecl) {
            if (env.table) {
                throw EvalError(stmt.pos,
                                table_preset
                                    ? "indeterminates are fixed in this environment"
                                    : "'vars' must precede every other statement");
            }
            for (const std::string& name : stmt.names) {
                if (is_builtin(name)) {
                    throw NameError(stmt.pos, "'" + name + "' is a builtin name");
                }
                if (std::find(pending.begin(), pending.end(), name) != pending.end()) {
                    throw NameError(stmt.pos, "duplicate indeterminate '" + name + "'");
                }
                pending.push_back(name);
            }
            continue;
        }
        if (!env.table) env.table = VarTable::make(pending);

        switch (stmt.kind) {
            case AstNode::Kind::Assign: {
                if (env.table->index(stmt.name)) {
                    throw NameError(stmt.pos,
                                    "cannot assign to indeterminate '" + stmt.name + "'");
                }
                if (is_builtin(stmt.name)) {
                    throw NameError(stmt.pos, "'" + stmt.name + "' is a builtin name");
                }
                Value v = eval_expression(stmt.children[0], env);
                env.bindings.insert_or_assign(stmt.name, std::move(v));
                break;
            }
            case AstNode::Kind::Assert: {
                Value lhs = eval_expression(stmt.children[0], env);
                Value rhs = eval_expression(stmt.children[1], env);
                bool eq = values_equal(lhs, rhs, stmt);
                bool passed = stmt.op == '=' ? eq : !eq;
                report.events.push_back(
                    {RunEvent::Kind::Assert, stmt.pos.line, passed, ""});
                break;
            }
            case AstNode::Kind::Show: {
                Value v = eval_expression(stmt.children[0], env);
                report.events.push_back(
                    {RunEvent::Kind::Show, stmt.pos.line, true, value_str(v)});
                break;
            }
            default:
                throw Error("unexpected node kind in statement position");
        }
    }
    return report;
}

RunReport interpret(const AstNode& script) {
    Environment env;
    return interpret(script, env);
}

RatFunc eval_ratfunc_text(std::string_view source, const VarTablePtr& table) {
    AstNode expr = parse_expression(source);
    Environment env{table, {}};
    Value v = eval_expression(expr, env);
    if (const auto* rf = std::get_if<RatFunc>(&v)) return *rf;
    throw TypeError(expr.pos, "expected a scalar expression");
}

} // namespace rene::script
