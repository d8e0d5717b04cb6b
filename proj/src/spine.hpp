#pragma once

// Internal helpers for building kernel-checkable equality proofs by rewriting
// on "spines": the list of composition factors of a map, outermost first, with
// identity factors dropped. Comp nodes are flattened; Tensor nodes stay atomic.

#include <cstddef>
#include <vector>

#include "skewcat/kernel.hpp"
#include "skewcat/map_expr.hpp"

namespace skewcat::detail {

std::vector<MapExpr> flatten(const MapExpr& f);

/// Right-associated composite of the factors; Id(domain) when empty.
MapExpr spine_of(const std::vector<MapExpr>& atoms, const Term& domain);

/// Proof of f == spine_of(flatten f, dom f).
EqProof to_spine(const MapExpr& f);

/// Proof of  Comp(spine l1, spine l2) == spine (l1 ++ l2),
/// where spine l2 has domain d2 and spine l1 sits on top of it.
EqProof append_spines(const std::vector<MapExpr>& l1,
                      const std::vector<MapExpr>& l2, const Term& d2);

/// Equality-preserving rewriting on the spine of a starting map. Each rewrite
/// replaces a factor segment via a checked equation; finish() closes the chain
/// against a target expression with the same spine.
class SpineChain {
public:
  explicit SpineChain(const MapExpr& start);

  const std::vector<MapExpr>& atoms() const { return atoms_; }

  /// Object at cut position i (between factors i-1 and i; atoms are
  /// outermost-first, so cut 0 is the codomain end).
  Term cut_object(std::size_t i) const;

  /// step must prove X == m with flatten(X) == atoms[i, i+len).
  /// len == 0 inserts at cut i; then X must be Id(cut_object(i)).
  void rewrite(std::size_t i, std::size_t len, const EqProof& step);

  /// Proof of start == target; flatten(target) must equal the current atoms.
  EqProof finish(const MapExpr& target) const;

private:
  MapExpr start_;
  Term domain_;
  std::vector<MapExpr> atoms_;
  std::vector<EqProof> steps_;
};

/// Comp(Id c (x) x, Id c (x) y) == Id c (x) Comp(x, y).
EqProof fold_pair_right(const Term& c, const MapExpr& x, const MapExpr& y);

/// Comp(x (x) Id c, y (x) Id c) == Comp(x, y) (x) Id c.
EqProof fold_pair_left(const MapExpr& x, const MapExpr& y, const Term& c);

}  // namespace skewcat::detail
