#include "dgforge/symexpr/expr.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <map>
#include <mutex>
#include <unordered_map>
#include <unordered_set>

namespace dgforge::symexpr {

namespace {

// ---- families ---------------------------------------------------------------

struct FamilyRegistry {
    std::mutex mu;
    std::vector<std::string> names;
    std::unordered_map<std::string, int> ids;
};

FamilyRegistry& families()
{
    static FamilyRegistry reg;
    return reg;
}

// ---- hashing ----------------------------------------------------------------

constexpr std::uint64_t kFnvOffset = 1469598103934665603ull;
constexpr std::uint64_t kFnvPrime = 1099511628211ull;

std::uint64_t fnv(std::uint64_t h, std::uint64_t x)
{
    for (int i = 0; i < 8; ++i) {
        h ^= (x >> (8 * i)) & 0xffu;
        h *= kFnvPrime;
    }
    return h;
}

std::uint64_t fnv_str(std::uint64_t h, const std::string& s)
{
    for (unsigned char c : s) {
        h ^= c;
        h *= kFnvPrime;
    }
    return h;
}

std::uint64_t content_hash(const Node& n)
{
    std::uint64_t h = kFnvOffset;
    h = fnv(h, static_cast<std::uint64_t>(n.kind));
    h = fnv(h, static_cast<std::uint64_t>(n.side));
    h = fnv(h, static_cast<std::uint64_t>(static_cast<std::int64_t>(n.index)));
    h = fnv(h, static_cast<std::uint64_t>(static_cast<std::int64_t>(n.dir)));
    if (n.family >= 0) h = fnv_str(h, family_name(n.family));
    if (n.kind == Kind::Constant) {
        std::uint64_t bits;
        std::memcpy(&bits, &n.value, sizeof bits);
        h = fnv(h, bits);
    }
    for (const Expr& k : n.kids) h = fnv(h, k.hash());
    return h;
}

// ---- interning --------------------------------------------------------------

bool shallow_equal(const Node& a, const Node& b)
{
    if (a.kind != b.kind || a.side != b.side || a.index != b.index || a.dir != b.dir ||
        a.family != b.family || a.kids.size() != b.kids.size())
        return false;
    if (a.kind == Kind::Constant) {
        std::uint64_t ba, bb;
        std::memcpy(&ba, &a.value, sizeof ba);
        std::memcpy(&bb, &b.value, sizeof bb);
        if (ba != bb) return false;
    }
    for (std::size_t i = 0; i < a.kids.size(); ++i)
        if (a.kids[i].get() != b.kids[i].get()) return false;
    return true;
}

} // namespace

class InternTable {
public:
    static InternTable& instance()
    {
        static InternTable t;
        return t;
    }

    Expr intern(Node&& proto)
    {
        proto.hash = content_hash(proto);
        std::lock_guard<std::mutex> lock(mu_);
        auto [lo, hi] = table_.equal_range(proto.hash);
        for (auto it = lo; it != hi;) {
            if (auto sp = it->second.lock()) {
                if (shallow_equal(*sp, proto)) return Expr(std::move(sp));
                ++it;
            } else {
                it = table_.erase(it); // expired entry
            }
        }
        auto sp = std::make_shared<const Node>(std::move(proto));
        table_.emplace(sp->hash, sp);
        return Expr(std::shared_ptr<const Node>(sp));
    }

private:
    std::mutex mu_;
    std::unordered_multimap<std::uint64_t, std::weak_ptr<const Node>> table_;
};

int intern_family(const std::string& name)
{
    auto& reg = families();
    std::lock_guard<std::mutex> lock(reg.mu);
    auto it = reg.ids.find(name);
    if (it != reg.ids.end()) return it->second;
    const int id = static_cast<int>(reg.names.size());
    reg.names.push_back(name);
    reg.ids.emplace(name, id);
    return id;
}

const std::string& family_name(int id)
{
    auto& reg = families();
    std::lock_guard<std::mutex> lock(reg.mu);
    return reg.names.at(static_cast<std::size_t>(id));
}

bool Expr::is_terminal() const
{
    switch (p_->kind) {
    case Kind::Constant:
    case Kind::Coordinate:
    case Kind::FieldComponent:
    case Kind::GradComponent:
    case Kind::NormalComponent:
    case Kind::FacetMeasure:
        return true;
    default:
        return false;
    }
}

// ---- structural order ---------------------------------------------------------

namespace {

int deep_compare(const Node& a, const Node& b)
{
    if (&a == &b) return 0;
    if (a.kind != b.kind) return a.kind < b.kind ? -1 : 1;
    if (a.side != b.side) return a.side < b.side ? -1 : 1;
    if (a.index != b.index) return a.index < b.index ? -1 : 1;
    if (a.dir != b.dir) return a.dir < b.dir ? -1 : 1;
    if (a.family != b.family) {
        if (a.family < 0 || b.family < 0) return a.family < b.family ? -1 : 1;
        const int c = family_name(a.family).compare(family_name(b.family));
        if (c != 0) return c < 0 ? -1 : 1;
    }
    if (a.kind == Kind::Constant && a.value != b.value) return a.value < b.value ? -1 : 1;
    if (a.kids.size() != b.kids.size()) return a.kids.size() < b.kids.size() ? -1 : 1;
    for (std::size_t i = 0; i < a.kids.size(); ++i) {
        if (a.kids[i] == b.kids[i]) continue;
        const int c = deep_compare(a.kids[i].node(), b.kids[i].node());
        if (c != 0) return c;
    }
    return 0;
}

} // namespace

bool structural_less(const Expr& a, const Expr& b)
{
    if (a == b) return false;
    return deep_compare(a.node(), b.node()) < 0;
}

// ---- terminal constructors ----------------------------------------------------

namespace {

Expr intern_node(Node&& n) { return InternTable::instance().intern(std::move(n)); }

Expr make_unary(Kind k, const Expr& x)
{
    Node n;
    n.kind = k;
    n.kids = {x};
    return intern_node(std::move(n));
}

} // namespace

Expr constant(double v)
{
    if (std::isnan(v)) throw EvalError("constant: NaN is not a representable constant");
    Node n;
    n.kind = Kind::Constant;
    n.value = v == 0.0 ? 0.0 : v; // normalise -0.0
    return intern_node(std::move(n));
}

Expr coordinate(int axis)
{
    Node n;
    n.kind = Kind::Coordinate;
    n.index = static_cast<std::int16_t>(axis);
    return intern_node(std::move(n));
}

Expr normal_component(int axis)
{
    Node n;
    n.kind = Kind::NormalComponent;
    n.index = static_cast<std::int16_t>(axis);
    return intern_node(std::move(n));
}

Expr facet_measure()
{
    Node n;
    n.kind = Kind::FacetMeasure;
    return intern_node(std::move(n));
}

Expr field_component(const std::string& family, int comp, TraceSide side)
{
    Node n;
    n.kind = Kind::FieldComponent;
    n.family = intern_family(family);
    n.index = static_cast<std::int16_t>(comp);
    n.side = side;
    return intern_node(std::move(n));
}

Expr grad_component(const std::string& family, int comp, int axis, TraceSide side)
{
    Node n;
    n.kind = Kind::GradComponent;
    n.family = intern_family(family);
    n.index = static_cast<std::int16_t>(comp);
    n.dir = static_cast<std::int16_t>(axis);
    n.side = side;
    return intern_node(std::move(n));
}

// ---- canonical sums and products ------------------------------------------------

namespace {

// Splits a canonical term into (coefficient, core). The core never starts with
// a constant factor.
std::pair<double, Expr> split_coefficient(const Expr& e)
{
    if (e.kind() == Kind::Product && !e.kids().empty() && e.kids()[0].is_constant()) {
        const double c = e.kids()[0].constant_value();
        if (e.kids().size() == 2) return {c, e.kids()[1]};
        Node n;
        n.kind = Kind::Product;
        n.kids.assign(e.kids().begin() + 1, e.kids().end());
        return {c, intern_node(std::move(n))};
    }
    return {1.0, e};
}

Expr scaled(double c, const Expr& core)
{
    if (c == 1.0) return core;
    Node n;
    n.kind = Kind::Product;
    n.kids.reserve(core.kind() == Kind::Product ? core.kids().size() + 1 : 2);
    n.kids.push_back(constant(c));
    if (core.kind() == Kind::Product)
        n.kids.insert(n.kids.end(), core.kids().begin(), core.kids().end());
    else
        n.kids.push_back(core);
    return intern_node(std::move(n));
}

} // namespace

Expr make_sum(std::span<const Expr> parts)
{
    double folded = 0.0;
    std::vector<std::pair<Expr, double>> terms; // (core, coefficient), insertion order
    std::unordered_map<const Node*, std::size_t> pos;

    auto add_term = [&](const Expr& t) {
        if (t.is_constant()) {
            folded += t.constant_value();
            return;
        }
        auto [c, core] = split_coefficient(t);
        auto it = pos.find(core.get());
        if (it == pos.end()) {
            pos.emplace(core.get(), terms.size());
            terms.emplace_back(core, c);
        } else {
            terms[it->second].second += c;
        }
    };

    for (const Expr& p : parts) {
        if (!p.valid()) throw Error("make_sum: invalid operand");
        if (p.kind() == Kind::Sum)
            for (const Expr& k : p.kids()) add_term(k);
        else
            add_term(p);
    }

    std::vector<Expr> out;
    out.reserve(terms.size() + 1);
    for (auto& [core, c] : terms)
        if (c != 0.0) out.push_back(scaled(c, core));
    std::sort(out.begin(), out.end(), structural_less);

    if (out.empty()) return constant(folded);
    if (folded == 0.0 && out.size() == 1) return out[0];
    if (folded != 0.0) out.insert(out.begin(), constant(folded));

    Node n;
    n.kind = Kind::Sum;
    n.kids = std::move(out);
    return intern_node(std::move(n));
}

Expr make_product(std::span<const Expr> parts)
{
    double folded = 1.0;
    std::vector<Expr> factors;

    auto add_factor = [&](const Expr& f) {
        if (f.is_constant())
            folded *= f.constant_value();
        else
            factors.push_back(f);
    };

    for (const Expr& p : parts) {
        if (!p.valid()) throw Error("make_product: invalid operand");
        if (p.kind() == Kind::Product)
            for (const Expr& k : p.kids()) add_factor(k);
        else
            add_factor(p);
    }

    if (folded == 0.0) return constant(0.0);
    std::sort(factors.begin(), factors.end(), structural_less);
    if (factors.empty()) return constant(folded);
    if (factors.size() == 1) {
        if (folded == 1.0) return factors[0];
        // Distribute the constant over a lone sum so that c*(a+b) and c*a + c*b
        // share one canonical form.
        if (factors[0].kind() == Kind::Sum) {
            std::vector<Expr> parts;
            parts.reserve(factors[0].kids().size());
            const Expr c = constant(folded);
            for (const Expr& k : factors[0].kids()) {
                const Expr pair[] = {c, k};
                parts.push_back(make_product(pair));
            }
            return make_sum(parts);
        }
    }

    Node n;
    n.kind = Kind::Product;
    n.kids.reserve(factors.size() + 1);
    if (folded != 1.0) n.kids.push_back(constant(folded));
    n.kids.insert(n.kids.end(), factors.begin(), factors.end());
    return intern_node(std::move(n));
}

Expr make_quotient(const Expr& num, const Expr& den)
{
    if (den.is_constant()) {
        if (den.constant_value() == 0.0) throw EvalError("quotient: constant division by zero");
        const Expr parts[] = {constant(1.0 / den.constant_value()), num};
        return make_product(parts);
    }
    if (num.is_constant(0.0)) return constant(0.0);
    if (num == den) return constant(1.0);
    Node n;
    n.kind = Kind::Quotient;
    n.kids = {num, den};
    return intern_node(std::move(n));
}

Expr pow(const Expr& base, const Expr& exponent)
{
    if (exponent.is_constant()) {
        const double p = exponent.constant_value();
        if (p == 1.0) return base;
        if (p == 0.0) return constant(1.0);
        if (base.is_constant()) {
            const double r = std::pow(base.constant_value(), p);
            if (std::isnan(r))
                throw EvalError("pow: domain error folding constant power");
            return constant(r);
        }
    }
    if (base.is_constant(1.0)) return constant(1.0);
    Node n;
    n.kind = Kind::Power;
    n.kids = {base, exponent};
    return intern_node(std::move(n));
}

Expr pow(const Expr& base, double exponent) { return pow(base, constant(exponent)); }

Expr operator+(const Expr& a, const Expr& b)
{
    const Expr parts[] = {a, b};
    return make_sum(parts);
}

Expr operator-(const Expr& a, const Expr& b)
{
    const Expr parts[] = {a, -b};
    return make_sum(parts);
}

Expr operator*(const Expr& a, const Expr& b)
{
    const Expr parts[] = {a, b};
    return make_product(parts);
}

Expr operator/(const Expr& a, const Expr& b) { return make_quotient(a, b); }

Expr operator-(const Expr& a)
{
    const Expr parts[] = {constant(-1.0), a};
    return make_product(parts);
}

Expr operator+(double a, const Expr& b) { return constant(a) + b; }
Expr operator+(const Expr& a, double b) { return a + constant(b); }
Expr operator-(double a, const Expr& b) { return constant(a) - b; }
Expr operator-(const Expr& a, double b) { return a - constant(b); }
Expr operator*(double a, const Expr& b) { return constant(a) * b; }
Expr operator*(const Expr& a, double b) { return a * constant(b); }
Expr operator/(double a, const Expr& b) { return constant(a) / b; }
Expr operator/(const Expr& a, double b) { return a / constant(b); }

namespace {

double fold_unary(Kind k, double x, const char* name)
{
    switch (k) {
    case Kind::Exp: return std::exp(x);
    case Kind::Ln:
        if (x <= 0.0) throw EvalError(std::string(name) + ": argument must be positive");
        return std::log(x);
    case Kind::Sin: return std::sin(x);
    case Kind::Cos: return std::cos(x);
    case Kind::Sqrt:
        if (x < 0.0) throw EvalError(std::string(name) + ": argument must be non-negative");
        return std::sqrt(x);
    case Kind::Abs: return std::abs(x);
    case Kind::Sign: return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0);
    default: throw Error("fold_unary: not a unary kind");
    }
}

} // namespace

Expr exp(const Expr& x)
{
    if (x.is_constant()) return constant(fold_unary(Kind::Exp, x.constant_value(), "exp"));
    return make_unary(Kind::Exp, x);
}

Expr ln(const Expr& x)
{
    if (x.is_constant()) return constant(fold_unary(Kind::Ln, x.constant_value(), "ln"));
    return make_unary(Kind::Ln, x);
}

Expr sin(const Expr& x)
{
    if (x.is_constant()) return constant(fold_unary(Kind::Sin, x.constant_value(), "sin"));
    return make_unary(Kind::Sin, x);
}

Expr cos(const Expr& x)
{
    if (x.is_constant()) return constant(fold_unary(Kind::Cos, x.constant_value(), "cos"));
    return make_unary(Kind::Cos, x);
}

Expr sqrt(const Expr& x)
{
    if (x.is_constant()) return constant(fold_unary(Kind::Sqrt, x.constant_value(), "sqrt"));
    return make_unary(Kind::Sqrt, x);
}

Expr abs(const Expr& x)
{
    if (x.is_constant()) return constant(fold_unary(Kind::Abs, x.constant_value(), "abs"));
    if (x.kind() == Kind::Abs) return x;
    return make_unary(Kind::Abs, x);
}

Expr sign(const Expr& x)
{
    if (x.is_constant()) return constant(fold_unary(Kind::Sign, x.constant_value(), "sign"));
    return make_unary(Kind::Sign, x);
}

Expr max(const Expr& a, const Expr& b)
{
    if (a == b) return a;
    if (a.is_constant() && b.is_constant())
        return constant(std::max(a.constant_value(), b.constant_value()));
    Node n;
    n.kind = Kind::Max;
    n.kids = {a, b};
    return intern_node(std::move(n));
}

Expr min(const Expr& a, const Expr& b)
{
    if (a == b) return a;
    if (a.is_constant() && b.is_constant())
        return constant(std::min(a.constant_value(), b.constant_value()));
    Node n;
    n.kind = Kind::Min;
    n.kids = {a, b};
    return intern_node(std::move(n));
}

Expr if_nonneg(const Expr& cond, const Expr& then_e, const Expr& else_e)
{
    if (cond.is_constant()) return cond.constant_value() >= 0.0 ? then_e : else_e;
    if (then_e == else_e) return then_e;
    Node n;
    n.kind = Kind::IfNonneg;
    n.kids = {cond, then_e, else_e};
    return intern_node(std::move(n));
}

// ---- simplify -------------------------------------------------------------------

namespace {

Expr rebuild(const Expr& e, std::unordered_map<const Node*, Expr>& memo)
{
    if (e.is_terminal()) return e;
    auto it = memo.find(e.get());
    if (it != memo.end()) return it->second;

    std::vector<Expr> kids;
    kids.reserve(e.kids().size());
    for (const Expr& k : e.kids()) kids.push_back(rebuild(k, memo));

    Expr out;
    switch (e.kind()) {
    case Kind::Sum: out = make_sum(kids); break;
    case Kind::Product: out = make_product(kids); break;
    case Kind::Quotient: out = make_quotient(kids[0], kids[1]); break;
    case Kind::Power: out = pow(kids[0], kids[1]); break;
    case Kind::Exp: out = exp(kids[0]); break;
    case Kind::Ln: out = ln(kids[0]); break;
    case Kind::Sin: out = sin(kids[0]); break;
    case Kind::Cos: out = cos(kids[0]); break;
    case Kind::Sqrt: out = sqrt(kids[0]); break;
    case Kind::Abs: out = abs(kids[0]); break;
    case Kind::Sign: out = sign(kids[0]); break;
    case Kind::Max: out = max(kids[0], kids[1]); break;
    case Kind::Min: out = min(kids[0], kids[1]); break;
    case Kind::IfNonneg: out = if_nonneg(kids[0], kids[1], kids[2]); break;
    default: throw Error("simplify: unexpected node kind");
    }
    memo.emplace(e.get(), out);
    return out;
}

} // namespace

Expr simplify(const Expr& e)
{
    std::unordered_map<const Node*, Expr> memo;
    return rebuild(e, memo);
}

// ---- differentiation ---------------------------------------------------------------

namespace {

bool is_differentiation_symbol(const Node& n)
{
    return n.kind == Kind::FieldComponent || n.kind == Kind::GradComponent ||
           n.kind == Kind::Coordinate;
}

struct DiffContext {
    const Node* var;
    std::unordered_map<const Node*, Expr> memo;
};

Expr diff_rec(const Expr& e, DiffContext& ctx)
{
    if (e.get() == ctx.var) return constant(1.0);
    if (e.is_terminal()) return constant(0.0);

    auto it = ctx.memo.find(e.get());
    if (it != ctx.memo.end()) return it->second;

    Expr out;
    const auto kids = e.kids();
    switch (e.kind()) {
    case Kind::Sum: {
        std::vector<Expr> parts;
        parts.reserve(kids.size());
        for (const Expr& k : kids) parts.push_back(diff_rec(k, ctx));
        out = make_sum(parts);
        break;
    }
    case Kind::Product: {
        std::vector<Expr> parts;
        for (std::size_t i = 0; i < kids.size(); ++i) {
            const Expr di = diff_rec(kids[i], ctx);
            if (di.is_constant(0.0)) continue;
            std::vector<Expr> factors;
            factors.reserve(kids.size());
            factors.push_back(di);
            for (std::size_t j = 0; j < kids.size(); ++j)
                if (j != i) factors.push_back(kids[j]);
            parts.push_back(make_product(factors));
        }
        out = make_sum(parts);
        break;
    }
    case Kind::Quotient: {
        const Expr &a = kids[0], &b = kids[1];
        const Expr da = diff_rec(a, ctx), db = diff_rec(b, ctx);
        out = make_quotient(da * b - a * db, b * b);
        break;
    }
    case Kind::Power: {
        const Expr &b = kids[0], &p = kids[1];
        const Expr db = diff_rec(b, ctx);
        if (p.is_constant()) {
            out = p * pow(b, p.constant_value() - 1.0) * db;
        } else {
            const Expr dp = diff_rec(p, ctx);
            out = pow(b, p) * (dp * ln(b) + p * db / b);
        }
        break;
    }
    case Kind::Exp: out = e * diff_rec(kids[0], ctx); break;
    case Kind::Ln: out = diff_rec(kids[0], ctx) / kids[0]; break;
    case Kind::Sin: out = cos(kids[0]) * diff_rec(kids[0], ctx); break;
    case Kind::Cos: out = -(sin(kids[0]) * diff_rec(kids[0], ctx)); break;
    case Kind::Sqrt: out = diff_rec(kids[0], ctx) / (2.0 * e); break;
    case Kind::Abs: out = sign(kids[0]) * diff_rec(kids[0], ctx); break;
    case Kind::Sign: out = constant(0.0); break;
    case Kind::Max:
        out = if_nonneg(kids[0] - kids[1], diff_rec(kids[0], ctx), diff_rec(kids[1], ctx));
        break;
    case Kind::Min:
        out = if_nonneg(kids[1] - kids[0], diff_rec(kids[0], ctx), diff_rec(kids[1], ctx));
        break;
    case Kind::IfNonneg:
        out = if_nonneg(kids[0], diff_rec(kids[1], ctx), diff_rec(kids[2], ctx));
        break;
    default: throw Error("diff: unexpected node kind");
    }
    ctx.memo.emplace(e.get(), out);
    return out;
}

} // namespace

Expr diff(const Expr& e, const Expr& var)
{
    if (!var.valid() || !is_differentiation_symbol(var.node()))
        throw Error("diff: differentiation variable must be a field component, gradient "
                    "component, or coordinate");
    DiffContext ctx;
    ctx.var = var.get();
    return diff_rec(e, ctx);
}

// ---- substitution / restriction / collection -------------------------------------------

namespace {

Expr map_terminals(const Expr& e, const std::function<Expr(const Expr&)>& f,
                   std::unordered_map<const Node*, Expr>& memo)
{
    if (e.is_terminal()) {
        Expr r = f(e);
        return r.valid() ? r : e;
    }
    auto it = memo.find(e.get());
    if (it != memo.end()) return it->second;

    std::vector<Expr> kids;
    kids.reserve(e.kids().size());
    bool changed = false;
    for (const Expr& k : e.kids()) {
        kids.push_back(map_terminals(k, f, memo));
        changed = changed || kids.back() != k;
    }

    Expr out;
    if (!changed) {
        out = e;
    } else {
        switch (e.kind()) {
        case Kind::Sum: out = make_sum(kids); break;
        case Kind::Product: out = make_product(kids); break;
        case Kind::Quotient: out = make_quotient(kids[0], kids[1]); break;
        case Kind::Power: out = pow(kids[0], kids[1]); break;
        case Kind::Exp: out = exp(kids[0]); break;
        case Kind::Ln: out = ln(kids[0]); break;
        case Kind::Sin: out = sin(kids[0]); break;
        case Kind::Cos: out = cos(kids[0]); break;
        case Kind::Sqrt: out = sqrt(kids[0]); break;
        case Kind::Abs: out = abs(kids[0]); break;
        case Kind::Sign: out = sign(kids[0]); break;
        case Kind::Max: out = max(kids[0], kids[1]); break;
        case Kind::Min: out = min(kids[0], kids[1]); break;
        case Kind::IfNonneg: out = if_nonneg(kids[0], kids[1], kids[2]); break;
        default: throw Error("substitute: unexpected node kind");
        }
    }
    memo.emplace(e.get(), out);
    return out;
}

} // namespace

Expr substitute(const Expr& e, const std::function<Expr(const Expr&)>& replace_terminal)
{
    std::unordered_map<const Node*, Expr> memo;
    return map_terminals(e, replace_terminal, memo);
}

Expr restrict_trace(const Expr& e, TraceSide side)
{
    if (side == TraceSide::None) return e;
    return substitute(e, [side](const Expr& t) -> Expr {
        const Node& n = t.node();
        switch (n.kind) {
        case Kind::FieldComponent:
        case Kind::GradComponent: {
            if (n.side == side) return t;
            if (n.side != TraceSide::None)
                throw FormError("restrict_trace: terminal already restricted to the other side");
            if (n.kind == Kind::FieldComponent)
                return field_component(family_name(n.family), n.index, side);
            return grad_component(family_name(n.family), n.index, n.dir, side);
        }
        case Kind::NormalComponent:
            return side == TraceSide::Plus ? t : -t;
        default:
            return t; // constants, coordinates, facet measure: single-valued on the facet
        }
    });
}

std::vector<Expr> collect_terminals(const Expr& e, const std::function<bool(const Node&)>& pred)
{
    std::vector<Expr> out;
    std::unordered_set<const Node*> seen;
    std::vector<Expr> stack = {e};
    while (!stack.empty()) {
        Expr cur = stack.back();
        stack.pop_back();
        if (!seen.insert(cur.get()).second) continue;
        if (cur.is_terminal()) {
            if (pred(cur.node())) out.push_back(cur);
        } else {
            for (const Expr& k : cur.kids()) stack.push_back(k);
        }
    }
    std::sort(out.begin(), out.end(), structural_less);
    return out;
}

bool contains_terminal(const Expr& e, const std::function<bool(const Node&)>& pred)
{
    std::unordered_set<const Node*> seen;
    std::vector<Expr> stack = {e};
    while (!stack.empty()) {
        Expr cur = stack.back();
        stack.pop_back();
        if (!seen.insert(cur.get()).second) continue;
        if (cur.is_terminal()) {
            if (pred(cur.node())) return true;
        } else {
            for (const Expr& k : cur.kids()) stack.push_back(k);
        }
    }
    return false;
}

} // namespace dgforge::symexpr
