#pragma once

#include "dgforge/symexpr/expr.hpp"

#include <map>
#include <span>
#include <string>
#include <vector>

namespace dgforge::symexpr {

/// Caller-owned table of values for the free symbols of an expression.
class Bindings {
public:
    Bindings& coords(std::span<const double> x);
    Bindings& normal(std::span<const double> n);
    Bindings& facet_h(double h);
    Bindings& field(const std::string& family, std::span<const double> values,
                    TraceSide side = TraceSide::None);
    /// Row-major gradient values, shape m x d.
    Bindings& gradient(const std::string& family, std::span<const double> values, int d,
                       TraceSide side = TraceSide::None);

    /// Value of a terminal node; throws EvalError when unbound.
    double resolve(const Node& terminal) const;

private:
    std::vector<double> coords_;
    std::vector<double> normal_;
    double facet_h_ = 0.0;
    bool has_facet_h_ = false;
    std::map<std::pair<int, int>, std::vector<double>> fields_;    // (family, side)
    std::map<std::pair<int, int>, std::vector<double>> grads_;     // (family, side), m x d
    std::map<std::pair<int, int>, int> grad_dim_;
};

/// Flattened, topologically ordered evaluator for a set of expression roots.
/// Shared subexpressions are computed once per evaluation. Terminals other
/// than constants become input slots that the caller fills per point.
class EvalPlan {
public:
    explicit EvalPlan(std::span<const Expr> roots);
    explicit EvalPlan(const Expr& root) : EvalPlan(std::span<const Expr>(&root, 1)) {}

    const std::vector<Expr>& inputs() const { return inputs_; }
    int num_roots() const { return static_cast<int>(root_slots_.size()); }
    std::size_t scratch_size() const { return slot_count_; }

    /// input_values matches inputs() order; roots_out receives one value per
    /// root; scratch is resized as needed and may be reused across calls.
    void evaluate(std::span<const double> input_values, std::span<double> roots_out,
                  std::vector<double>& scratch) const;

private:
    struct Instr {
        Kind kind;
        std::int32_t out;
        std::int32_t a = -1;
        std::int32_t b = -1;
        std::int32_t c = -1;
        std::int32_t nargs = 0;
        std::int32_t argofs = 0;
        double cval = 0.0;
        const Node* src = nullptr;
    };

    std::vector<Instr> instrs_;
    std::vector<std::int32_t> extra_args_;
    std::vector<Expr> inputs_;
    std::vector<std::int32_t> root_slots_;
    std::vector<Expr> roots_; // keeps the DAG alive
    std::map<std::int32_t, Expr> err_exprs_; // printable ln/sqrt/pow sites
    std::size_t slot_count_ = 0;
};

/// One-shot evaluation of a single expression. All free symbols must be bound.
double eval(const Expr& e, const Bindings& bindings);

} // namespace dgforge::symexpr
