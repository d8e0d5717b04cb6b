#include "skewcat/term.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace skewcat {

Variable::Variable(std::string name) : name_(std::move(name)) {
  if (name_.empty()) throw std::invalid_argument("variable name must be nonempty");
}

struct Term::Node {
  Kind kind;
  std::string var;          // Kind::Var only
  std::vector<Term> kids;   // Kind::Tensor only: [left, right]
  int size;
  int depth;
  std::size_t hash;
};

namespace {

std::size_t combine(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Term Term::var(Variable v) { return var(v.name()); }

Term Term::var(std::string_view name) {
  if (name.empty()) throw std::invalid_argument("variable name must be nonempty");
  auto node = std::make_shared<const Node>(
      Node{Kind::Var, std::string(name), {}, 1, 1,
           combine(0xa7, std::hash<std::string_view>{}(name))});
  return Term(std::move(node));
}

Term Term::unit() {
  static const Term u{std::make_shared<const Node>(
      Node{Kind::Unit, {}, {}, 1, 1, 0x1d1ULL})};
  return u;
}

Term Term::tensor(const Term& left, const Term& right) {
  auto node = std::make_shared<const Node>(
      Node{Kind::Tensor, {}, {left, right},
           1 + left.size() + right.size(),
           1 + std::max(left.depth(), right.depth()),
           combine(combine(0x7e, left.hash()), right.hash())});
  return Term(std::move(node));
}

Term::Kind Term::kind() const { return node_->kind; }

Variable Term::variable() const {
  assert(is_var());
  return Variable(node_->var);
}

const Term& Term::left() const {
  assert(is_tensor());
  return node_->kids[0];
}

const Term& Term::right() const {
  assert(is_tensor());
  return node_->kids[1];
}

int Term::size() const { return node_->size; }
int Term::depth() const { return node_->depth; }
std::size_t Term::hash() const { return node_->hash; }

bool Term::operator==(const Term& other) const {
  const Node* a = node_.get();
  const Node* b = other.node_.get();
  if (a == b) return true;
  if (a->kind != b->kind || a->hash != b->hash || a->size != b->size) return false;
  switch (a->kind) {
    case Kind::Unit: return true;
    case Kind::Var: return a->var == b->var;
    case Kind::Tensor:
      return a->kids[0] == b->kids[0] && a->kids[1] == b->kids[1];
  }
  return false;
}

std::vector<Variable> variables_in_order(const Term& a) {
  std::vector<Variable> out;
  std::function<void(const Term&)> walk = [&](const Term& t) {
    switch (t.kind()) {
      case Term::Kind::Var: out.push_back(t.variable()); break;
      case Term::Kind::Unit: break;
      case Term::Kind::Tensor:
        walk(t.left());
        walk(t.right());
        break;
    }
  };
  walk(a);
  return out;
}

NormalForm NormalForm::cons(const Variable& head, const NormalForm& tail) {
  NormalForm out;
  out.vars_.reserve(1 + tail.vars_.size());
  out.vars_.push_back(head);
  out.vars_.insert(out.vars_.end(), tail.vars_.begin(), tail.vars_.end());
  return out;
}

NormalForm NormalForm::of(std::vector<Variable> vars) {
  NormalForm out;
  out.vars_ = std::move(vars);
  return out;
}

RevNormalForm RevNormalForm::snoc(const RevNormalForm& init, const Variable& last) {
  RevNormalForm out;
  out.vars_ = init.vars_;
  out.vars_.push_back(last);
  return out;
}

RevNormalForm RevNormalForm::of(std::vector<Variable> vars) {
  RevNormalForm out;
  out.vars_ = std::move(vars);
  return out;
}

Term emb(const NormalForm& n) {
  Term acc = Term::unit();
  for (auto it = n.vars().rbegin(); it != n.vars().rend(); ++it)
    acc = Term::tensor(Term::var(*it), acc);
  return acc;
}

NormalForm nfx(const Term& a, const NormalForm& n) {
  switch (a.kind()) {
    case Term::Kind::Var: return NormalForm::cons(a.variable(), n);
    case Term::Kind::Unit: return n;
    case Term::Kind::Tensor: return nfx(a.left(), nfx(a.right(), n));
  }
  throw std::logic_error("unreachable");
}

NormalForm nf(const Term& a) { return nfx(a, NormalForm::nil()); }

NormalForm concat_nf(const NormalForm& n1, const NormalForm& n2) {
  std::vector<Variable> vars = n1.vars();
  vars.insert(vars.end(), n2.vars().begin(), n2.vars().end());
  return NormalForm::of(std::move(vars));
}

std::optional<NormalForm> is_emb_image(const Term& a) {
  std::vector<Variable> vars;
  const Term* cur = &a;
  while (true) {
    if (cur->is_unit()) return NormalForm::of(std::move(vars));
    if (cur->is_tensor() && cur->left().is_var()) {
      vars.push_back(cur->left().variable());
      cur = &cur->right();
      continue;
    }
    return std::nullopt;
  }
}

Term embrev(const RevNormalForm& r) {
  Term acc = Term::unit();
  for (const Variable& v : r.vars()) acc = Term::tensor(acc, Term::var(v));
  return acc;
}

RevNormalForm nfxr(const Term& a, const RevNormalForm& r) {
  switch (a.kind()) {
    case Term::Kind::Var: return RevNormalForm::snoc(r, a.variable());
    case Term::Kind::Unit: return r;
    case Term::Kind::Tensor: return nfxr(a.right(), nfxr(a.left(), r));
  }
  throw std::logic_error("unreachable");
}

RevNormalForm nfrev(const Term& a) { return nfxr(a, RevNormalForm::nil()); }

std::optional<RevNormalForm> is_embrev_image(const Term& a) {
  // Collect from the right: embrev image is left-nested variables over the unit.
  std::vector<Variable> rev;
  const Term* cur = &a;
  while (true) {
    if (cur->is_unit()) {
      std::reverse(rev.begin(), rev.end());
      return RevNormalForm::of(std::move(rev));
    }
    if (cur->is_tensor() && cur->right().is_var()) {
      rev.push_back(cur->right().variable());
      cur = &cur->left();
      continue;
    }
    return std::nullopt;
  }
}

std::string to_string(const Term& a) {
  switch (a.kind()) {
    case Term::Kind::Var: return a.variable().name();
    case Term::Kind::Unit: return "I";
    case Term::Kind::Tensor:
      return "(" + to_string(a.left()) + " * " + to_string(a.right()) + ")";
  }
  throw std::logic_error("unreachable");
}

namespace {
std::string var_list(const std::vector<Variable>& vars) {
  std::string out = "[";
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (i) out += ",";
    out += vars[i].name();
  }
  out += "]";
  return out;
}
}  // namespace

std::string to_string(const NormalForm& n) { return var_list(n.vars()); }
std::string to_string(const RevNormalForm& r) { return var_list(r.vars()); }

}  // namespace skewcat
