#pragma once

#include "dgforge/common.hpp"

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace dgforge::symexpr {

/// Node kinds of the expression DAG. Terminals first, then algebraic and
/// elementary-function nodes. Sign and IfNonneg are produced internally by
/// differentiation of abs/max/min; they evaluate and print like any other node.
enum class Kind : std::uint8_t {
    Constant,
    Coordinate,      // x_i
    FieldComponent,  // u_j of some field family
    GradComponent,   // du_j/dx_l of some field family
    NormalComponent, // n_i, oriented out of the plus cell
    FacetMeasure,    // penalty length scale h on the current facet
    Sum,             // n-ary; a leading Constant child holds the folded constant
    Product,         // n-ary; a leading Constant child holds the folded coefficient
    Quotient,
    Power,
    Exp,
    Ln,
    Sin,
    Cos,
    Sqrt,
    Abs,
    Sign,     // sign(0) = 0
    Max,      // binary
    Min,      // binary
    IfNonneg, // ternary: kids[0] >= 0 ? kids[1] : kids[2]
};

enum class TraceSide : std::uint8_t { None, Plus, Minus };

class Expr;

struct Node {
    Kind kind;
    TraceSide side = TraceSide::None; // FieldComponent / GradComponent only
    std::int16_t index = -1;          // coordinate axis, normal axis, or field component
    std::int16_t dir = -1;            // GradComponent: differentiation axis
    std::int32_t family = -1;         // FieldComponent / GradComponent: interned family id
    double value = 0.0;               // Constant
    std::uint64_t hash = 0;           // content hash, stable across processes
    std::vector<Expr> kids;
};

/// Immutable handle to a hash-consed expression node. Structurally equal
/// expressions share the same node, so operator== is exact structural equality.
class Expr {
public:
    Expr() = default;

    bool valid() const { return static_cast<bool>(p_); }
    const Node& node() const { return *p_; }
    const Node* get() const { return p_.get(); }
    Kind kind() const { return p_->kind; }
    std::uint64_t hash() const { return p_->hash; }
    std::span<const Expr> kids() const { return p_->kids; }

    bool is_constant() const { return p_ && p_->kind == Kind::Constant; }
    bool is_constant(double v) const { return is_constant() && p_->value == v; }
    double constant_value() const { return p_->value; }
    bool is_terminal() const;

    friend bool operator==(const Expr& a, const Expr& b) { return a.p_ == b.p_; }
    friend bool operator!=(const Expr& a, const Expr& b) { return a.p_ != b.p_; }

private:
    explicit Expr(std::shared_ptr<const Node> p) : p_(std::move(p)) {}
    std::shared_ptr<const Node> p_;
    friend class InternTable;
};

/// Field family registry: maps family names ("u", "v", "w", ...) to ids.
/// Names take part in structural hashing so canonical orderings do not depend
/// on registration order.
int intern_family(const std::string& name);
const std::string& family_name(int id);

// ---- terminal constructors -------------------------------------------------

Expr constant(double v);
Expr coordinate(int axis);
Expr normal_component(int axis);
Expr facet_measure();
Expr field_component(const std::string& family, int comp, TraceSide side = TraceSide::None);
Expr grad_component(const std::string& family, int comp, int axis, TraceSide side = TraceSide::None);

// ---- algebra ----------------------------------------------------------------
// Constructors canonicalise: sums/products are flattened and sorted with
// constants folded and like terms merged, so expressions stay in the same
// normal form simplify() produces.

Expr make_sum(std::span<const Expr> parts);
Expr make_product(std::span<const Expr> parts);
Expr make_quotient(const Expr& num, const Expr& den);
Expr pow(const Expr& base, const Expr& exponent);
Expr pow(const Expr& base, double exponent);

Expr operator+(const Expr& a, const Expr& b);
Expr operator-(const Expr& a, const Expr& b);
Expr operator*(const Expr& a, const Expr& b);
Expr operator/(const Expr& a, const Expr& b);
Expr operator-(const Expr& a);
Expr operator+(double a, const Expr& b);
Expr operator+(const Expr& a, double b);
Expr operator-(double a, const Expr& b);
Expr operator-(const Expr& a, double b);
Expr operator*(double a, const Expr& b);
Expr operator*(const Expr& a, double b);
Expr operator/(double a, const Expr& b);
Expr operator/(const Expr& a, double b);

Expr exp(const Expr& x);
Expr ln(const Expr& x);
Expr sin(const Expr& x);
Expr cos(const Expr& x);
Expr sqrt(const Expr& x);
Expr abs(const Expr& x);
Expr sign(const Expr& x);
Expr max(const Expr& a, const Expr& b);
Expr min(const Expr& a, const Expr& b);
Expr if_nonneg(const Expr& cond, const Expr& then_e, const Expr& else_e);

// ---- structural utilities ----------------------------------------------------

/// Process-independent total order on expressions (hash, then deep compare).
bool structural_less(const Expr& a, const Expr& b);

/// Semantics-preserving normalisation. Constructors already canonicalise, so
/// this is a bottom-up rebuild; it is idempotent by construction.
Expr simplify(const Expr& e);

/// Exact partial derivative of e with respect to a terminal symbol (field
/// component, gradient component, or coordinate). Other symbols are treated as
/// independent. abs uses sign(0) = 0; max/min take the first-argument branch
/// on ties.
Expr diff(const Expr& e, const Expr& var);

/// Replace terminal nodes according to `map` (keyed by node pointer).
Expr substitute(const Expr& e, const std::function<Expr(const Expr&)>& replace_terminal);

/// Apply a trace restriction, pushing it down to the terminals. Field and
/// gradient components acquire the side; coordinates, constants and the facet
/// measure are unchanged; the minus restriction of a normal component negates
/// it. Restricting an already restricted terminal to the other side is an
/// error; to the same side it is the identity.
Expr restrict_trace(const Expr& e, TraceSide side);

/// Distinct terminal nodes of the given kinds reachable from e, in structural
/// order (deterministic across processes).
std::vector<Expr> collect_terminals(const Expr& e, const std::function<bool(const Node&)>& pred);

/// True if e contains a terminal satisfying pred.
bool contains_terminal(const Expr& e, const std::function<bool(const Node&)>& pred);

} // namespace dgforge::symexpr

template <>
struct std::hash<dgforge::symexpr::Expr> {
    std::size_t operator()(const dgforge::symexpr::Expr& e) const noexcept {
        return std::hash<const void*>()(e.get());
    }
};
