#include "dgforge/symexpr/print.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace dgforge::symexpr {

namespace {

// Precedence levels: sum < product/quotient < power < atom.
enum { kPrecSum = 1, kPrecProd = 2, kPrecPow = 3, kPrecAtom = 4 };

std::string format_number(double v)
{
    if (v == static_cast<long long>(v) && std::abs(v) < 1e15) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%lld", static_cast<long long>(v));
        return buf;
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string side_mark(TraceSide s)
{
    switch (s) {
    case TraceSide::Plus: return "(+)";
    case TraceSide::Minus: return "(-)";
    default: return "";
    }
}

std::string print(const Expr& e, int parent_prec);

std::string print_call(const char* name, std::span<const Expr> args)
{
    std::string out = name;
    out += '(';
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (i) out += ", ";
        out += print(args[i], kPrecSum);
    }
    out += ')';
    return out;
}

std::string print(const Expr& e, int parent_prec)
{
    const Node& n = e.node();
    std::string out;
    int prec = kPrecAtom;
    switch (n.kind) {
    case Kind::Constant:
        out = format_number(n.value);
        if (n.value < 0.0) prec = kPrecProd;
        break;
    case Kind::Coordinate: out = "x" + std::to_string(n.index); break;
    case Kind::NormalComponent: out = "n" + std::to_string(n.index); break;
    case Kind::FacetMeasure: out = "h"; break;
    case Kind::FieldComponent:
        out = family_name(n.family) + "[" + std::to_string(n.index) + "]" + side_mark(n.side);
        break;
    case Kind::GradComponent:
        out = "grad(" + family_name(n.family) + "[" + std::to_string(n.index) + "]," +
              std::to_string(n.dir) + ")" + side_mark(n.side);
        break;
    case Kind::Sum: {
        prec = kPrecSum;
        bool first = true;
        for (const Expr& k : n.kids) {
            std::string part = print(k, kPrecSum);
            if (first) {
                out = part;
                first = false;
            } else if (!part.empty() && part[0] == '-') {
                out += " - " + part.substr(1);
            } else {
                out += " + " + part;
            }
        }
        break;
    }
    case Kind::Product: {
        prec = kPrecProd;
        std::size_t start = 0;
        if (n.kids[0].is_constant(-1.0) && n.kids.size() > 1) {
            out = "-";
            start = 1;
        }
        for (std::size_t i = start; i < n.kids.size(); ++i) {
            if (i > start) out += "*";
            out += print(n.kids[i], kPrecProd + 1);
        }
        break;
    }
    case Kind::Quotient:
        prec = kPrecProd;
        out = print(n.kids[0], kPrecProd + 1) + "/" + print(n.kids[1], kPrecProd + 1);
        break;
    case Kind::Power:
        prec = kPrecPow;
        out = print(n.kids[0], kPrecPow + 1) + "^" + print(n.kids[1], kPrecPow + 1);
        break;
    case Kind::Exp: out = print_call("exp", n.kids); break;
    case Kind::Ln: out = print_call("ln", n.kids); break;
    case Kind::Sin: out = print_call("sin", n.kids); break;
    case Kind::Cos: out = print_call("cos", n.kids); break;
    case Kind::Sqrt: out = print_call("sqrt", n.kids); break;
    case Kind::Abs: out = print_call("abs", n.kids); break;
    case Kind::Sign: out = print_call("sign", n.kids); break;
    case Kind::Max: out = print_call("max", n.kids); break;
    case Kind::Min: out = print_call("min", n.kids); break;
    case Kind::IfNonneg: out = print_call("ifpos", n.kids); break;
    }
    if (prec < parent_prec) return "(" + out + ")";
    return out;
}

} // namespace

std::string to_string(const Expr& e)
{
    if (!e.valid()) return "<null>";
    return print(e, kPrecSum);
}

} // namespace dgforge::symexpr
