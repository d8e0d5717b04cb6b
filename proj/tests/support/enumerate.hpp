#pragma once

// Exhaustive enumeration of terms, normal forms and well-typed map
// expressions over a small alphabet, for the oracle-style test suites.

#include <cstdint>
#include <vector>

#include "skewcat/map_expr.hpp"
#include "skewcat/models.hpp"
#include "skewcat/term.hpp"

namespace skewcat::testing {

/// Leaves are the unit plus the first `num_vars` names of X, Y, Z, W.
std::vector<Variable> alphabet(int num_vars);

/// All terms of depth <= max_depth (leaves have depth 1), deterministic order.
std::vector<Term> enumerate_terms(int max_depth, int num_vars);

/// All normal forms with length <= max_len over the alphabet.
std::vector<NormalForm> enumerate_normal_forms(int max_len, int num_vars);

/// All well-typed map expressions of syntax size <= max_size, where syntax
/// size counts map constructors plus the node counts of carried object
/// indices. Deterministic order.
std::vector<MapExpr> enumerate_maps(int max_size, int num_vars);

/// All valuations assigning the given variables pointed sets with
/// size <= max_size; point_sweep enumerates every point, otherwise point 0.
std::vector<PointedValuation> enumerate_valuations(
    const std::vector<Variable>& vars, int max_size, bool point_sweep);

}  // namespace skewcat::testing
