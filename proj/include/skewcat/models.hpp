#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "skewcat/map_expr.hpp"
#include "skewcat/term.hpp"

namespace skewcat {

/// A finite pointed set: elements 0..size-1 with a distinguished point.
struct FinPointed {
  int size = 1;
  int point = 0;
  bool operator==(const FinPointed&) const = default;
};

/// A point-preserving function as a lookup table.
struct PointedFn {
  FinPointed from, to;
  std::vector<int> table;  // table[from.point] == to.point
  bool operator==(const PointedFn&) const = default;
};

using PointedValuation = std::map<Variable, FinPointed>;

/// Pointed-set model: I = ({*}, *), (X,p) (x) (Y,q) = (X + Y, inl p), with the
/// left block laid out first. Throws std::out_of_range on unbound variables.
FinPointed eval_term_pointed(const Term& a, const PointedValuation& v);

/// lam collapses inl * to the point (not injective), rho is the left inclusion
/// (not surjective), alpha is the identity on indices.
PointedFn eval_map_pointed(const MapExpr& f, const PointedValuation& v);

struct SeparationWitness {
  PointedValuation valuation;
  int element;
};

/// First valuation and element where the two evaluations differ;
/// nullopt (indistinguishable) makes no claim of equality.
std::optional<SeparationWitness> separate(
    const MapExpr& f, const MapExpr& g,
    std::span<const PointedValuation> valuations);

/// All assignments of pointed sets of sizes 1 and 2 (point 0) to the
/// variables of f and g, in lexicographic order.
std::vector<PointedValuation> default_separation_valuations(const MapExpr& f,
                                                            const MapExpr& g);

/// Thin model on naturals: I = n, x (x) y = (x -. n) + y with truncating
/// subtraction. A map a => b can only exist when eval a <= eval b.
struct NatModelParams {
  std::uint64_t unit = 0;
  std::map<Variable, std::uint64_t> valuation;
};

std::uint64_t eval_term_nat(const Term& a, const NatModelParams& p);

/// Refuting parameters (eval a > eval b) if any; consistent otherwise.
/// A refutation certifies that no map expression a => b exists.
std::optional<NatModelParams> check_nat_hom(const Term& a, const Term& b,
                                            std::span<const NatModelParams> ps);

/// True when every generator instance inside f satisfies its inequality in
/// the thin model (lam an equality, rho and alpha <=).
bool nat_map_valid(const MapExpr& f, const NatModelParams& p);

std::string to_string(const PointedValuation& v);
std::string to_string(const PointedFn& f);

}  // namespace skewcat
