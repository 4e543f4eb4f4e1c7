#include "dgforge/symexpr/eval.hpp"

#include "dgforge/symexpr/print.hpp"

#include <cmath>
#include <unordered_map>

namespace dgforge::symexpr {

Bindings& Bindings::coords(std::span<const double> x)
{
    coords_.assign(x.begin(), x.end());
    return *this;
}

Bindings& Bindings::normal(std::span<const double> n)
{
    normal_.assign(n.begin(), n.end());
    return *this;
}

Bindings& Bindings::facet_h(double h)
{
    facet_h_ = h;
    has_facet_h_ = true;
    return *this;
}

Bindings& Bindings::field(const std::string& family, std::span<const double> values,
                          TraceSide side)
{
    fields_[{intern_family(family), static_cast<int>(side)}].assign(values.begin(), values.end());
    return *this;
}

Bindings& Bindings::gradient(const std::string& family, std::span<const double> values, int d,
                             TraceSide side)
{
    const std::pair<int, int> key{intern_family(family), static_cast<int>(side)};
    grads_[key].assign(values.begin(), values.end());
    grad_dim_[key] = d;
    return *this;
}

double Bindings::resolve(const Node& n) const
{
    switch (n.kind) {
    case Kind::Constant: return n.value;
    case Kind::Coordinate:
        if (n.index < 0 || n.index >= static_cast<int>(coords_.size()))
            throw EvalError("unbound symbol: x" + std::to_string(n.index));
        return coords_[static_cast<std::size_t>(n.index)];
    case Kind::NormalComponent:
        if (n.index < 0 || n.index >= static_cast<int>(normal_.size()))
            throw EvalError("unbound symbol: n" + std::to_string(n.index));
        return normal_[static_cast<std::size_t>(n.index)];
    case Kind::FacetMeasure:
        if (!has_facet_h_) throw EvalError("unbound symbol: h");
        return facet_h_;
    case Kind::FieldComponent: {
        auto it = fields_.find({n.family, static_cast<int>(n.side)});
        if (it == fields_.end() || n.index >= static_cast<int>(it->second.size()))
            throw EvalError("unbound symbol: " + family_name(n.family) + "[" +
                            std::to_string(n.index) + "]");
        return it->second[static_cast<std::size_t>(n.index)];
    }
    case Kind::GradComponent: {
        const std::pair<int, int> key{n.family, static_cast<int>(n.side)};
        auto it = grads_.find(key);
        if (it == grads_.end())
            throw EvalError("unbound symbol: grad(" + family_name(n.family) + "[" +
                            std::to_string(n.index) + "])");
        const int d = grad_dim_.at(key);
        const std::size_t idx = static_cast<std::size_t>(n.index * d + n.dir);
        if (idx >= it->second.size())
            throw EvalError("unbound symbol: grad(" + family_name(n.family) + "[" +
                            std::to_string(n.index) + "]," + std::to_string(n.dir) + ")");
        return it->second[idx];
    }
    default:
        throw EvalError("resolve: not a terminal node");
    }
}

EvalPlan::EvalPlan(std::span<const Expr> roots) : roots_(roots.begin(), roots.end())
{
    std::unordered_map<const Node*, std::int32_t> slot;
    std::int32_t next_slot = 0;

    // Iterative post-order over the DAG.
    struct Frame {
        Expr e;
        std::size_t next_kid = 0;
    };
    std::vector<Frame> stack;

    auto visit = [&](const Expr& root) {
        if (slot.count(root.get())) return;
        stack.push_back({root});
        while (!stack.empty()) {
            Frame& f = stack.back();
            const Node& n = f.e.node();
            if (slot.count(f.e.get())) {
                stack.pop_back();
                continue;
            }
            if (f.next_kid < n.kids.size()) {
                const Expr& k = n.kids[f.next_kid++];
                if (!slot.count(k.get())) stack.push_back({k});
                continue;
            }
            // All children ready: emit.
            const std::int32_t out = next_slot++;
            if (f.e.is_terminal() && n.kind != Kind::Constant) {
                Instr ins;
                ins.kind = n.kind;
                ins.out = out;
                ins.src = f.e.get();
                ins.nargs = -1; // input load
                ins.cval = static_cast<double>(inputs_.size());
                inputs_.push_back(f.e);
                slot.emplace(f.e.get(), out);
                instrs_.push_back(ins);
            } else {
                Instr ins;
                ins.kind = n.kind;
                ins.out = out;
                ins.src = f.e.get();
                if (n.kind == Kind::Constant) {
                    ins.cval = n.value;
                } else if (n.kind == Kind::Sum || n.kind == Kind::Product) {
                    ins.nargs = static_cast<std::int32_t>(n.kids.size());
                    ins.argofs = static_cast<std::int32_t>(extra_args_.size());
                    for (const Expr& k : n.kids) extra_args_.push_back(slot.at(k.get()));
                } else {
                    if (n.kids.size() > 0) ins.a = slot.at(n.kids[0].get());
                    if (n.kids.size() > 1) ins.b = slot.at(n.kids[1].get());
                    if (n.kids.size() > 2) ins.c = slot.at(n.kids[2].get());
                }
                if (n.kind == Kind::Ln || n.kind == Kind::Sqrt || n.kind == Kind::Power)
                    err_exprs_.emplace(out, f.e);
                slot.emplace(f.e.get(), out);
                instrs_.push_back(ins);
            }
            stack.pop_back();
        }
    };

    for (const Expr& r : roots_) visit(r);
    for (const Expr& r : roots_) root_slots_.push_back(slot.at(r.get()));
    slot_count_ = static_cast<std::size_t>(next_slot);
}

void EvalPlan::evaluate(std::span<const double> input_values, std::span<double> roots_out,
                        std::vector<double>& scratch) const
{
    if (input_values.size() != inputs_.size())
        throw EvalError("EvalPlan::evaluate: wrong number of input values");
    if (roots_out.size() != root_slots_.size())
        throw EvalError("EvalPlan::evaluate: wrong number of outputs");
    scratch.resize(slot_count_);
    double* v = scratch.data();

    for (const Instr& ins : instrs_) {
        if (ins.nargs < 0) { // input load
            v[ins.out] = input_values[static_cast<std::size_t>(ins.cval)];
            continue;
        }
        switch (ins.kind) {
        case Kind::Constant: v[ins.out] = ins.cval; break;
        case Kind::Sum: {
            double acc = 0.0;
            const std::int32_t* args = extra_args_.data() + ins.argofs;
            for (std::int32_t i = 0; i < ins.nargs; ++i) acc += v[args[i]];
            v[ins.out] = acc;
            break;
        }
        case Kind::Product: {
            double acc = 1.0;
            const std::int32_t* args = extra_args_.data() + ins.argofs;
            for (std::int32_t i = 0; i < ins.nargs; ++i) acc *= v[args[i]];
            v[ins.out] = acc;
            break;
        }
        case Kind::Quotient: v[ins.out] = v[ins.a] / v[ins.b]; break;
        case Kind::Power: {
            const double r = std::pow(v[ins.a], v[ins.b]);
            if (std::isnan(r) && !std::isnan(v[ins.a]) && !std::isnan(v[ins.b]))
                throw EvalError("eval: pow domain error (base " + std::to_string(v[ins.a]) +
                                ") in " + to_string(err_exprs_.at(ins.out)));
            v[ins.out] = r;
            break;
        }
        case Kind::Exp: v[ins.out] = std::exp(v[ins.a]); break;
        case Kind::Ln:
            if (!(v[ins.a] > 0.0))
                throw EvalError("eval: ln of non-positive value " + std::to_string(v[ins.a]) +
                                " in " + to_string(err_exprs_.at(ins.out)));
            v[ins.out] = std::log(v[ins.a]);
            break;
        case Kind::Sin: v[ins.out] = std::sin(v[ins.a]); break;
        case Kind::Cos: v[ins.out] = std::cos(v[ins.a]); break;
        case Kind::Sqrt:
            if (v[ins.a] < 0.0)
                throw EvalError("eval: sqrt of negative value " + std::to_string(v[ins.a]) +
                                " in " + to_string(err_exprs_.at(ins.out)));
            v[ins.out] = std::sqrt(v[ins.a]);
            break;
        case Kind::Abs: v[ins.out] = std::abs(v[ins.a]); break;
        case Kind::Sign:
            v[ins.out] = v[ins.a] > 0.0 ? 1.0 : (v[ins.a] < 0.0 ? -1.0 : 0.0);
            break;
        case Kind::Max: v[ins.out] = v[ins.a] > v[ins.b] ? v[ins.a] : v[ins.b]; break;
        case Kind::Min: v[ins.out] = v[ins.a] < v[ins.b] ? v[ins.a] : v[ins.b]; break;
        case Kind::IfNonneg: v[ins.out] = v[ins.a] >= 0.0 ? v[ins.b] : v[ins.c]; break;
        default:
            throw EvalError("eval: unexpected instruction kind");
        }
    }
    for (std::size_t i = 0; i < root_slots_.size(); ++i)
        roots_out[i] = v[root_slots_[i]];
}

double eval(const Expr& e, const Bindings& bindings)
{
    EvalPlan plan(e);
    std::vector<double> in;
    in.reserve(plan.inputs().size());
    for (const Expr& t : plan.inputs()) in.push_back(bindings.resolve(t.node()));
    double out = 0.0;
    std::vector<double> scratch;
    plan.evaluate(in, std::span<double>(&out, 1), scratch);
    return out;
}

} // namespace dgforge::symexpr
