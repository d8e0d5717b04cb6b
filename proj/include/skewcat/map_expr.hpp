#pragma once

#include <memory>
#include <optional>
#include <string>

#include "skewcat/term.hpp"

namespace skewcat {

/// Typed map expression of the free skew-monoidal category.
///
/// Generators carry full object indices, so dom/cod are total functions on raw
/// syntax:
///   lam a   : I (x) a  =>  a
///   rho a   : a        =>  a (x) I
///   alpha a b c : (a (x) b) (x) c  =>  a (x) (b (x) c)
/// Comp(f, g) is f after g; well-typedness (dom f == cod g at every Comp) is
/// checked separately by check_map, not at construction.
class MapExpr {
public:
  enum class Kind { Id, Comp, Tensor, Lam, Rho, Alpha };

  static MapExpr id(const Term& a);
  static MapExpr comp(const MapExpr& f, const MapExpr& g);
  static MapExpr tensor(const MapExpr& f, const MapExpr& g);
  static MapExpr lam(const Term& a);
  static MapExpr rho(const Term& a);
  static MapExpr alpha(const Term& a, const Term& b, const Term& c);

  Kind kind() const;
  bool is_id() const { return kind() == Kind::Id; }
  bool is_comp() const { return kind() == Kind::Comp; }
  bool is_tensor() const { return kind() == Kind::Tensor; }

  const MapExpr& first() const;   // Comp: the outer map f of f . g; Tensor: left
  const MapExpr& second() const;  // Comp: the inner map g of f . g; Tensor: right
  const Term& index(int i = 0) const;  // Id/Lam/Rho: 0; Alpha: 0,1,2

  const Term& dom() const;
  const Term& cod() const;

  /// Map constructors plus the node counts of all carried object indices.
  int size() const;
  std::size_t hash() const;

  bool operator==(const MapExpr& other) const;

private:
  struct Node;
  explicit MapExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// nullopt when every Comp node composes; otherwise a message naming the
/// offending composite and the mismatched terms.
std::optional<std::string> check_map(const MapExpr& f);

/// Throws TypingError when check_map reports a problem.
void require_well_typed(const MapExpr& f);

/// Variables occurring in the object indices of f (sorted, deduplicated).
std::vector<Variable> map_variables(const MapExpr& f);

// Grammar: map := "id" "_" term | map "." map | "(" map "*" map ")"
//               | "lam" "_" term | "rho" "_" term
//               | "alpha" "_" "(" term "," term "," term ")".
std::string to_string(const MapExpr& f);

}  // namespace skewcat

template <>
struct std::hash<skewcat::MapExpr> {
  std::size_t operator()(const skewcat::MapExpr& f) const { return f.hash(); }
};
