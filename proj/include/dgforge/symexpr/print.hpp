#pragma once

#include "dgforge/symexpr/expr.hpp"

#include <string>

namespace dgforge::symexpr {

/// Infix debug form with explicit trace markers "(+)" / "(-)". The output is
/// canonical and stable across runs, so it can be pinned in golden tests.
std::string to_string(const Expr& e);

} // namespace dgforge::symexpr
