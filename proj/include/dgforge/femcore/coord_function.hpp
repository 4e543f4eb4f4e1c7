#pragma once

#include "dgforge/symexpr/eval.hpp"
#include "dgforge/symexpr/tensor.hpp"

#include <span>
#include <vector>

namespace dgforge::femcore {

/// Fast vector-valued function of the coordinates, compiled from symbolic
/// components. Rejects expressions with non-coordinate symbols.
class CoordFunction {
public:
    explicit CoordFunction(const symexpr::Vector& components);

    int size() const { return plan_.num_roots(); }
    void eval(double x, double y, std::span<double> out) const;
    double eval1(double x, double y) const;

private:
    symexpr::EvalPlan plan_;
    std::vector<int> axes_;
    mutable std::vector<double> scratch_;
    mutable std::vector<double> in_;
};

} // namespace dgforge::femcore
