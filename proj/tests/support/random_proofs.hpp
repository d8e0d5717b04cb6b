#pragma once

// Random schema-valid derivation trees for the kernel/model soundness sweep.
// Every node is generated against its rule schema (children are built to
// compose), so check_proof accepts each tree by construction of the schema,
// never by weakening the check.

#include <random>

#include "skewcat/kernel.hpp"

namespace skewcat::testing {

class ProofGenerator {
 public:
  explicit ProofGenerator(std::uint64_t seed, int num_vars = 3);

  EqProof next();

 private:
  Term random_term(int max_depth);
  /// Random composite of whiskered rewrite steps starting at `from`.
  MapExpr random_walk_map(const Term& from, int steps);
  MapExpr random_map();
  EqProof random_axiom();
  /// Random proof whose conclusion's left side is exactly `m`.
  EqProof random_proof_from(const MapExpr& m, int depth);
  EqProof random_proof(int depth);

  std::mt19937_64 rng_;
  int num_vars_;
};

}  // namespace skewcat::testing
