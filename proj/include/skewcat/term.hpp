#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace skewcat {

/// A named generating object. Equality and ordering are name equality.
class Variable {
public:
  explicit Variable(std::string name);
  const std::string& name() const { return name_; }
  auto operator<=>(const Variable&) const = default;

private:
  std::string name_;
};

/// Object expression: a variable, the unit I, or a tensor of two expressions.
/// Immutable shared tree; size, depth and a structural hash are cached per node.
class Term {
public:
  enum class Kind { Var, Unit, Tensor };

  static Term var(Variable v);
  static Term var(std::string_view name);
  static Term unit();
  static Term tensor(const Term& left, const Term& right);

  Kind kind() const;
  bool is_var() const { return kind() == Kind::Var; }
  bool is_unit() const { return kind() == Kind::Unit; }
  bool is_tensor() const { return kind() == Kind::Tensor; }

  Variable variable() const;   // Kind::Var only
  const Term& left() const;    // Kind::Tensor only
  const Term& right() const;   // Kind::Tensor only

  /// Node count: leaves count 1, Tensor counts 1 + left + right.
  int size() const;
  /// Leaves have depth 1.
  int depth() const;
  std::size_t hash() const;

  bool operator==(const Term& other) const;

private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Variables of a term in left-to-right order (with repeats).
std::vector<Variable> variables_in_order(const Term& a);

/// Right-nested normal form: a list of variables terminated by the unit.
class NormalForm {
public:
  NormalForm() = default;  // J, the empty normal form
  static NormalForm nil() { return NormalForm{}; }
  static NormalForm cons(const Variable& head, const NormalForm& tail);
  static NormalForm of(std::vector<Variable> vars);

  bool is_nil() const { return vars_.empty(); }
  std::size_t length() const { return vars_.size(); }
  const std::vector<Variable>& vars() const { return vars_; }

  bool operator==(const NormalForm&) const = default;

private:
  std::vector<Variable> vars_;
};

/// Left-nested mirror of NormalForm.
class RevNormalForm {
public:
  RevNormalForm() = default;  // the empty reverse normal form
  static RevNormalForm nil() { return RevNormalForm{}; }
  static RevNormalForm snoc(const RevNormalForm& init, const Variable& last);
  static RevNormalForm of(std::vector<Variable> vars);

  bool is_nil() const { return vars_.empty(); }
  std::size_t length() const { return vars_.size(); }
  const std::vector<Variable>& vars() const { return vars_; }

  bool operator==(const RevNormalForm&) const = default;

private:
  std::vector<Variable> vars_;
};

// emb J = I, emb (X `(x) N) = `X (x) emb N  (right-nested, unit innermost).
Term emb(const NormalForm& n);

// nfx X N = X `(x) N;  nfx I N = N;  nfx (A (x) B) N = nfx A (nfx B N).
NormalForm nfx(const Term& a, const NormalForm& n);

// nf A = nfx A J.
NormalForm nf(const Term& a);

// List concatenation; associative with J as two-sided unit.
NormalForm concat_nf(const NormalForm& n1, const NormalForm& n2);

/// Syntactic inverse of emb: the normal form n with emb n == a, if a is
/// right-nested variables over the unit.
std::optional<NormalForm> is_emb_image(const Term& a);

// Mirrors: embrev (R `(x) X) = embrev R (x) `X;  nfxr (A (x) B) R = nfxr B (nfxr A R).
Term embrev(const RevNormalForm& r);
RevNormalForm nfxr(const Term& a, const RevNormalForm& r);
RevNormalForm nfrev(const Term& a);
std::optional<RevNormalForm> is_embrev_image(const Term& a);

// Grammar: term := name | "I" | "(" term "*" term ")"; normal forms print as "[X,Y]".
std::string to_string(const Term& a);
std::string to_string(const NormalForm& n);
std::string to_string(const RevNormalForm& r);

}  // namespace skewcat

template <>
struct std::hash<skewcat::Term> {
  std::size_t operator()(const skewcat::Term& t) const { return t.hash(); }
};
