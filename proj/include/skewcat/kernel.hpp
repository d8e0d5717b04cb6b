#pragma once

#include <memory>
#include <string>
#include <vector>

#include "skewcat/map_expr.hpp"
#include "skewcat/term.hpp"

namespace skewcat {

/// A pair of parallel map expressions claimed derivably equal.
struct Equation {
  MapExpr lhs, rhs;
  bool operator==(const Equation& o) const { return lhs == o.lhs && rhs == o.rhs; }
};

std::string to_string(const Equation& eq);

/// Derivation tree for the derivable-equality calculus, one node kind per
/// inference rule. Axiom nodes store the object indices (or raw maps) needed
/// to rebuild both sides of their conclusion; check_proof reconstructs and
/// validates every node.
///
/// Rule schemas ((x) binds tighter than ., composition is right-associated):
///   Refl f              f == f
///   Sym p               from f == g conclude g == f
///   Trans p q           from f == g and g == h conclude f == h
///   CompCong p q        from f == g and h == k conclude f . h == g . k
///   TensorCong p q      from f == g and h == k conclude f (x) h == g (x) k
///   IdL f               id . f == f
///   IdR f               f == f . id
///   CompAssoc f g h     (f . g) . h == f . (g . h)
///   TensorId a b        id_a (x) id_b == id_(a(x)b)
///   TensorComp h f k g  (h . f) (x) (k . g) == h (x) k . f (x) g
///   NatLam f            lam . id (x) f == f . lam
///   NatRho f            rho . f == f (x) id . rho
///   NatAlpha f g h      alpha . (f (x) g) (x) h == f (x) (g (x) h) . alpha
///   LawA                lam . rho == id            (at I)
///   LawB a b            id == id (x) lam . alpha . rho (x) id
///   LawC a b            lam . alpha == lam (x) id
///   LawD a b            alpha . rho == id (x) rho
///   LawE a b c d        alpha . alpha == id (x) alpha . alpha . alpha (x) id
class EqProof {
public:
  enum class Rule {
    Refl, Sym, Trans, CompCong, TensorCong,
    IdL, IdR, CompAssoc, TensorId, TensorComp,
    NatLam, NatRho, NatAlpha,
    LawA, LawB, LawC, LawD, LawE,
  };

  static EqProof refl(const MapExpr& f);
  static EqProof sym(const EqProof& p);
  static EqProof trans(const EqProof& p, const EqProof& q);
  static EqProof comp_cong(const EqProof& p, const EqProof& q);
  static EqProof tensor_cong(const EqProof& p, const EqProof& q);
  static EqProof id_l(const MapExpr& f);
  static EqProof id_r(const MapExpr& f);
  static EqProof comp_assoc(const MapExpr& f, const MapExpr& g, const MapExpr& h);
  static EqProof tensor_id(const Term& a, const Term& b);
  static EqProof tensor_comp(const MapExpr& h, const MapExpr& f,
                             const MapExpr& k, const MapExpr& g);
  static EqProof nat_lam(const MapExpr& f);
  static EqProof nat_rho(const MapExpr& f);
  static EqProof nat_alpha(const MapExpr& f, const MapExpr& g, const MapExpr& h);
  static EqProof law_a();
  static EqProof law_b(const Term& a, const Term& b);
  static EqProof law_c(const Term& a, const Term& b);
  static EqProof law_d(const Term& a, const Term& b);
  static EqProof law_e(const Term& a, const Term& b, const Term& c, const Term& d);

  Rule rule() const;
  const std::vector<MapExpr>& maps() const;
  const std::vector<Term>& terms() const;
  const std::vector<EqProof>& children() const;

  /// Total node count of the derivation tree.
  std::size_t node_count() const;

private:
  struct Node;
  explicit EqProof(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Fold a nonempty sequence of proofs with Trans.
EqProof trans_chain(const std::vector<EqProof>& steps);

/// The kernel. Rebuilds the conclusion of every node, checks each rule's
/// schema and the typing of every side, and returns the proven equation.
/// Throws KernelError (schema or parallelism violations) or TypingError.
Equation check_proof(const EqProof& p);

/// S-expression serialization, e.g. (trans (sym (law-a)) (law-a)).
std::string to_sexpr(const EqProof& p);

}  // namespace skewcat
