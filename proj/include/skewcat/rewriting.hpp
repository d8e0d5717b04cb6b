#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "skewcat/kernel.hpp"
#include "skewcat/map_expr.hpp"
#include "skewcat/term.hpp"

namespace skewcat {

/// Position of a subterm: directions through Tensor nodes from the root.
enum class Dir { Left, Right };
using Path = std::vector<Dir>;

enum class StepRule { Lam, Rho, Alpha };

/// One rewrite of a whole term: a rule applied at a subterm position.
/// Redex shapes: Lam needs I (x) A, Rho applies anywhere, Alpha needs
/// (A (x) B) (x) C.
struct RewriteStep {
  StepRule rule;
  Path at;
  Term on;
};

/// The rewritten term; throws std::invalid_argument when the path is invalid
/// or the subterm does not match the rule's redex shape.
Term apply_step(const RewriteStep& s);

/// The step as a map expression: the generator whiskered with identities
/// along the path. dom == s.on, cod == apply_step(s).
MapExpr step_to_map(const RewriteStep& s);

/// Right-associated composite of the step images, first step innermost;
/// Id(from) for the empty sequence.
MapExpr composite_of_steps(std::span<const RewriteStep> steps, const Term& from);

/// All rewrite steps valid on a term, ordered by rule (Lam < Rho < Alpha)
/// then by path (preorder).
std::vector<RewriteStep> valid_steps(const Term& a);

/// Step sequence (application order) whose chain maps dom f to cod f.
std::vector<RewriteStep> decompose_steps(const MapExpr& f);

struct Decomposition {
  std::vector<RewriteStep> steps;
  EqProof certificate;  // conclusion: f == composite_of_steps(steps, dom f)
};

/// Decompose f into whiskered single-generator steps (left-first through
/// tensors) together with a kernel-checkable certificate.
Decomposition decompose(const MapExpr& f);

enum class SearchVerdict { Found, Exhausted, NfMismatch };

struct SearchResult {
  SearchVerdict verdict;
  std::vector<RewriteStep> steps;  // Found only; shortest, lexicographically least
  std::size_t explored = 0;
};

/// Breadth-first reachability from a to b through terms of size at most
/// max_term_size, at most max_steps steps. NfMismatch is decisive (no map can
/// exist); Exhausted is bounded evidence only.
SearchResult search_maps(const Term& a, const Term& b, int max_term_size,
                         int max_steps);

// Steps print as "rule@path" with path spelled L/R, e.g. "rho@L"; the root
// position prints as "rule@".
std::string to_string(const Path& p);
std::string to_string(const RewriteStep& s);

}  // namespace skewcat
