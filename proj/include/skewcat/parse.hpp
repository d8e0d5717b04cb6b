#pragma once

#include <string_view>

#include "skewcat/errors.hpp"
#include "skewcat/kernel.hpp"
#include "skewcat/map_expr.hpp"
#include "skewcat/models.hpp"
#include "skewcat/term.hpp"

namespace skewcat {

/// term := name | "I" | "(" term "*" term ")"
/// "*" chains inside one pair of parentheses group to the left.
Term parse_term(std::string_view text);

/// map := chain; chain := item ("." item)*   (right-associated)
/// item := "id_" term | "lam_" term | "rho_" term
///       | "alpha_(" term "," term "," term ")"
///       | "(" chain ("*" chain)* ")"        (tensor needs parentheses)
MapExpr parse_map(std::string_view text);

/// Proof s-expressions as written by to_sexpr, e.g.
///   (trans (sym (law-a)) (law-a))
/// with terms as X | I | (* A B) and maps as (id A) | (comp F G) | (ten F G)
/// | (lam A) | (rho A) | (alpha A B C).
EqProof parse_proof(std::string_view text);

/// Lines "X = pointed 2" or "X = nat 5"; blank lines and '#' comments skipped.
struct ValuationFile {
  PointedValuation pointed;
  std::map<Variable, std::uint64_t> nat;
};
ValuationFile parse_valuation_file(std::string_view text);

}  // namespace skewcat
