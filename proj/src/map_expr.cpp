#include "skewcat/map_expr.hpp"

#include <cassert>
#include <set>
#include <stdexcept>

#include "skewcat/errors.hpp"

namespace skewcat {

struct MapExpr::Node {
  Kind kind;
  std::vector<Term> idx;      // generator object indices
  std::vector<MapExpr> kids;  // Comp/Tensor children
  Term dom, cod;
  int size;
  std::size_t hash;
};

namespace {
std::size_t combine(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}
}  // namespace

MapExpr MapExpr::id(const Term& a) {
  return MapExpr(std::make_shared<const Node>(
      Node{Kind::Id, {a}, {}, a, a, 1 + a.size(), combine(0x11, a.hash())}));
}

MapExpr MapExpr::comp(const MapExpr& f, const MapExpr& g) {
  return MapExpr(std::make_shared<const Node>(
      Node{Kind::Comp, {}, {f, g}, g.dom(), f.cod(), 1 + f.size() + g.size(),
           combine(combine(0x22, f.hash()), g.hash())}));
}

MapExpr MapExpr::tensor(const MapExpr& f, const MapExpr& g) {
  return MapExpr(std::make_shared<const Node>(
      Node{Kind::Tensor, {}, {f, g}, Term::tensor(f.dom(), g.dom()),
           Term::tensor(f.cod(), g.cod()), 1 + f.size() + g.size(),
           combine(combine(0x33, f.hash()), g.hash())}));
}

MapExpr MapExpr::lam(const Term& a) {
  return MapExpr(std::make_shared<const Node>(
      Node{Kind::Lam, {a}, {}, Term::tensor(Term::unit(), a), a, 1 + a.size(),
           combine(0x44, a.hash())}));
}

MapExpr MapExpr::rho(const Term& a) {
  return MapExpr(std::make_shared<const Node>(
      Node{Kind::Rho, {a}, {}, a, Term::tensor(a, Term::unit()), 1 + a.size(),
           combine(0x55, a.hash())}));
}

MapExpr MapExpr::alpha(const Term& a, const Term& b, const Term& c) {
  return MapExpr(std::make_shared<const Node>(
      Node{Kind::Alpha, {a, b, c}, {},
           Term::tensor(Term::tensor(a, b), c),
           Term::tensor(a, Term::tensor(b, c)),
           1 + a.size() + b.size() + c.size(),
           combine(combine(combine(0x66, a.hash()), b.hash()), c.hash())}));
}

MapExpr::Kind MapExpr::kind() const { return node_->kind; }

const MapExpr& MapExpr::first() const {
  assert(is_comp() || is_tensor());
  return node_->kids[0];
}

const MapExpr& MapExpr::second() const {
  assert(is_comp() || is_tensor());
  return node_->kids[1];
}

const Term& MapExpr::index(int i) const {
  assert(i >= 0 && i < static_cast<int>(node_->idx.size()));
  return node_->idx[static_cast<std::size_t>(i)];
}

const Term& MapExpr::dom() const { return node_->dom; }
const Term& MapExpr::cod() const { return node_->cod; }
int MapExpr::size() const { return node_->size; }
std::size_t MapExpr::hash() const { return node_->hash; }

bool MapExpr::operator==(const MapExpr& other) const {
  const Node* a = node_.get();
  const Node* b = other.node_.get();
  if (a == b) return true;
  if (a->kind != b->kind || a->hash != b->hash || a->size != b->size) return false;
  if (a->idx.size() != b->idx.size()) return false;
  for (std::size_t i = 0; i < a->idx.size(); ++i)
    if (!(a->idx[i] == b->idx[i])) return false;
  for (std::size_t i = 0; i < a->kids.size(); ++i)
    if (!(a->kids[i] == b->kids[i])) return false;
  return true;
}

std::optional<std::string> check_map(const MapExpr& f) {
  switch (f.kind()) {
    case MapExpr::Kind::Id:
    case MapExpr::Kind::Lam:
    case MapExpr::Kind::Rho:
    case MapExpr::Kind::Alpha:
      return std::nullopt;
    case MapExpr::Kind::Tensor: {
      if (auto err = check_map(f.first())) return err;
      return check_map(f.second());
    }
    case MapExpr::Kind::Comp: {
      if (auto err = check_map(f.first())) return err;
      if (auto err = check_map(f.second())) return err;
      if (!(f.first().dom() == f.second().cod()))
        return "composite " + to_string(f) + " does not compose: dom " +
               to_string(f.first().dom()) + " of the outer map differs from cod " +
               to_string(f.second().cod()) + " of the inner map";
      return std::nullopt;
    }
  }
  throw std::logic_error("unreachable");
}

void require_well_typed(const MapExpr& f) {
  if (auto err = check_map(f)) throw TypingError(*err);
}

std::vector<Variable> map_variables(const MapExpr& f) {
  std::set<Variable> vars;
  for (const Variable& v : variables_in_order(f.dom())) vars.insert(v);
  for (const Variable& v : variables_in_order(f.cod())) vars.insert(v);
  return {vars.begin(), vars.end()};
}

namespace {

// Comp chains print flat and right-associated ("a . b . c"); a left-nested
// composite needs explicit parentheses around its first operand.
std::string print_comp_operand(const MapExpr& f) {
  if (f.is_comp()) return "(" + to_string(f) + ")";
  return to_string(f);
}

}  // namespace

std::string to_string(const MapExpr& f) {
  switch (f.kind()) {
    case MapExpr::Kind::Id: return "id_" + to_string(f.index());
    case MapExpr::Kind::Lam: return "lam_" + to_string(f.index());
    case MapExpr::Kind::Rho: return "rho_" + to_string(f.index());
    case MapExpr::Kind::Alpha:
      return "alpha_(" + to_string(f.index(0)) + ", " + to_string(f.index(1)) +
             ", " + to_string(f.index(2)) + ")";
    case MapExpr::Kind::Comp:
      return print_comp_operand(f.first()) + " . " + to_string(f.second());
    case MapExpr::Kind::Tensor:
      return "(" + to_string(f.first()) + " * " + to_string(f.second()) + ")";
  }
  throw std::logic_error("unreachable");
}

}  // namespace skewcat
