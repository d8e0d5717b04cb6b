#include "skewcat/rewriting.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "spine.hpp"

namespace skewcat {

namespace {

const Term& subterm_at(const Term& t, const Path& p, std::size_t i = 0) {
  if (i == p.size()) return t;
  if (!t.is_tensor())
    throw std::invalid_argument("path leaves the term at " + to_string(t));
  return subterm_at(p[i] == Dir::Left ? t.left() : t.right(), p, i + 1);
}

Term replace_at(const Term& t, const Path& p, const Term& sub, std::size_t i = 0) {
  if (i == p.size()) return sub;
  if (!t.is_tensor())
    throw std::invalid_argument("path leaves the term at " + to_string(t));
  if (p[i] == Dir::Left)
    return Term::tensor(replace_at(t.left(), p, sub, i + 1), t.right());
  return Term::tensor(t.left(), replace_at(t.right(), p, sub, i + 1));
}

bool lam_applies(const Term& t) { return t.is_tensor() && t.left().is_unit(); }
bool alpha_applies(const Term& t) { return t.is_tensor() && t.left().is_tensor(); }

Term contract_redex(StepRule rule, const Term& t) {
  switch (rule) {
    case StepRule::Lam:
      if (!lam_applies(t))
        throw std::invalid_argument("lam does not match redex " + to_string(t));
      return t.right();
    case StepRule::Rho:
      return Term::tensor(t, Term::unit());
    case StepRule::Alpha:
      if (!alpha_applies(t))
        throw std::invalid_argument("alpha does not match redex " + to_string(t));
      return Term::tensor(t.left().left(),
                          Term::tensor(t.left().right(), t.right()));
  }
  throw std::logic_error("unreachable");
}

MapExpr generator_at(StepRule rule, const Term& t) {
  switch (rule) {
    case StepRule::Lam:
      if (!lam_applies(t))
        throw std::invalid_argument("lam does not match redex " + to_string(t));
      return MapExpr::lam(t.right());
    case StepRule::Rho:
      return MapExpr::rho(t);
    case StepRule::Alpha:
      if (!alpha_applies(t))
        throw std::invalid_argument("alpha does not match redex " + to_string(t));
      return MapExpr::alpha(t.left().left(), t.left().right(), t.right());
  }
  throw std::logic_error("unreachable");
}

MapExpr whisker(StepRule rule, const Path& p, const Term& t, std::size_t i = 0) {
  if (i == p.size()) return generator_at(rule, t);
  if (!t.is_tensor())
    throw std::invalid_argument("path leaves the term at " + to_string(t));
  if (p[i] == Dir::Left)
    return MapExpr::tensor(whisker(rule, p, t.left(), i + 1),
                           MapExpr::id(t.right()));
  return MapExpr::tensor(MapExpr::id(t.left()),
                         whisker(rule, p, t.right(), i + 1));
}

void positions_preorder(const Term& t, Path& acc, std::vector<Path>& out) {
  out.push_back(acc);
  if (t.is_tensor()) {
    acc.push_back(Dir::Left);
    positions_preorder(t.left(), acc, out);
    acc.back() = Dir::Right;
    positions_preorder(t.right(), acc, out);
    acc.pop_back();
  }
}

}  // namespace

Term apply_step(const RewriteStep& s) {
  const Term& redex = subterm_at(s.on, s.at);
  return replace_at(s.on, s.at, contract_redex(s.rule, redex));
}

MapExpr step_to_map(const RewriteStep& s) { return whisker(s.rule, s.at, s.on); }

MapExpr composite_of_steps(std::span<const RewriteStep> steps, const Term& from) {
  if (steps.empty()) return MapExpr::id(from);
  MapExpr acc = step_to_map(steps.front());
  for (std::size_t i = 1; i < steps.size(); ++i)
    acc = MapExpr::comp(step_to_map(steps[i]), acc);
  return acc;
}

std::vector<RewriteStep> valid_steps(const Term& a) {
  std::vector<Path> positions;
  Path acc;
  positions_preorder(a, acc, positions);
  std::vector<RewriteStep> out;
  for (StepRule rule : {StepRule::Lam, StepRule::Rho, StepRule::Alpha}) {
    for (const Path& p : positions) {
      const Term& sub = subterm_at(a, p);
      bool ok = rule == StepRule::Rho ||
                (rule == StepRule::Lam ? lam_applies(sub) : alpha_applies(sub));
      if (ok) out.push_back({rule, p, a});
    }
  }
  return out;
}

namespace {

void prefix_steps(std::vector<RewriteStep>& steps, Dir d,
                  const Term& other_side) {
  for (RewriteStep& s : steps) {
    Path p;
    p.reserve(s.at.size() + 1);
    p.push_back(d);
    p.insert(p.end(), s.at.begin(), s.at.end());
    s.at = std::move(p);
    s.on = d == Dir::Left ? Term::tensor(s.on, other_side)
                          : Term::tensor(other_side, s.on);
  }
}

std::vector<RewriteStep> decompose_steps_rec(const MapExpr& f) {
  switch (f.kind()) {
    case MapExpr::Kind::Id:
      return {};
    case MapExpr::Kind::Lam:
    case MapExpr::Kind::Rho:
    case MapExpr::Kind::Alpha: {
      StepRule rule = f.kind() == MapExpr::Kind::Lam   ? StepRule::Lam
                      : f.kind() == MapExpr::Kind::Rho ? StepRule::Rho
                                                       : StepRule::Alpha;
      return {{rule, {}, f.dom()}};
    }
    case MapExpr::Kind::Comp: {
      std::vector<RewriteStep> out = decompose_steps_rec(f.second());
      std::vector<RewriteStep> rest = decompose_steps_rec(f.first());
      out.insert(out.end(), rest.begin(), rest.end());
      return out;
    }
    case MapExpr::Kind::Tensor: {
      // left-first: rewrite under the left side while the right stays put
      std::vector<RewriteStep> left = decompose_steps_rec(f.first());
      std::vector<RewriteStep> right = decompose_steps_rec(f.second());
      prefix_steps(left, Dir::Left, f.second().dom());
      prefix_steps(right, Dir::Right, f.first().cod());
      left.insert(left.end(), right.begin(), right.end());
      return left;
    }
  }
  throw std::logic_error("unreachable");
}

/// x == y for maps with identical spines (reassociation + identity laws only).
EqProof prove_flat_equal(const MapExpr& x, const MapExpr& y) {
  if (x == y) return EqProof::refl(x);
  return EqProof::trans(detail::to_spine(x), EqProof::sym(detail::to_spine(y)));
}

/// m (x) id_b == the composite with - (x) id_b pushed onto every factor of m;
/// m must be a right-associated composite of atoms (or an identity).
EqProof whisker_right_distrib(const MapExpr& m, const Term& b) {
  const MapExpr idb = MapExpr::id(b);
  if (m.is_id()) return EqProof::tensor_id(m.index(), b);
  if (!m.is_comp()) return EqProof::refl(MapExpr::tensor(m, idb));
  const MapExpr& x = m.first();
  const MapExpr& y = m.second();
  return trans_chain(
      {EqProof::tensor_cong(EqProof::refl(m), EqProof::sym(EqProof::id_l(idb))),
       EqProof::tensor_comp(x, y, idb, idb),
       EqProof::comp_cong(EqProof::refl(MapExpr::tensor(x, idb)),
                          whisker_right_distrib(y, b))});
}

/// id_a (x) m == the composite with id_a (x) - pushed onto every factor of m.
EqProof whisker_left_distrib(const Term& a, const MapExpr& m) {
  const MapExpr ida = MapExpr::id(a);
  if (m.is_id()) return EqProof::tensor_id(a, m.index());
  if (!m.is_comp()) return EqProof::refl(MapExpr::tensor(ida, m));
  const MapExpr& x = m.first();
  const MapExpr& y = m.second();
  return trans_chain(
      {EqProof::tensor_cong(EqProof::sym(EqProof::id_l(ida)), EqProof::refl(m)),
       EqProof::tensor_comp(ida, ida, x, y),
       EqProof::comp_cong(EqProof::refl(MapExpr::tensor(ida, x)),
                          whisker_left_distrib(a, y))});
}

EqProof decompose_certificate(const MapExpr& f, const MapExpr& target) {
  switch (f.kind()) {
    case MapExpr::Kind::Id:
    case MapExpr::Kind::Lam:
    case MapExpr::Kind::Rho:
    case MapExpr::Kind::Alpha:
      // nil rewrite or a root step: the composite is f itself
      return EqProof::refl(f);
    case MapExpr::Kind::Comp: {
      const MapExpr& u = f.first();
      const MapExpr& v = f.second();
      std::vector<RewriteStep> su = decompose_steps_rec(u);
      std::vector<RewriteStep> sv = decompose_steps_rec(v);
      const MapExpr cu = composite_of_steps(su, u.dom());
      const MapExpr cv = composite_of_steps(sv, v.dom());
      EqProof congs = EqProof::comp_cong(decompose_certificate(u, cu),
                                         decompose_certificate(v, cv));
      return EqProof::trans(congs,
                            prove_flat_equal(MapExpr::comp(cu, cv), target));
    }
    case MapExpr::Kind::Tensor: {
      const MapExpr& u = f.first();
      const MapExpr& v = f.second();
      const Term a = u.dom(), a2 = u.cod(), b = v.dom();
      std::vector<RewriteStep> su = decompose_steps_rec(u);
      std::vector<RewriteStep> sv = decompose_steps_rec(v);
      const MapExpr cu = composite_of_steps(su, a);
      const MapExpr cv = composite_of_steps(sv, b);

      // u (x) v == (id . u) (x) (v . id) == id (x) v . u (x) id
      EqProof split = trans_chain(
          {EqProof::tensor_cong(EqProof::sym(EqProof::id_l(u)),
                                EqProof::id_r(v)),
           EqProof::tensor_comp(MapExpr::id(a2), u, v, MapExpr::id(b))});

      EqProof left = EqProof::trans(
          EqProof::tensor_cong(decompose_certificate(u, cu),
                               EqProof::refl(MapExpr::id(b))),
          whisker_right_distrib(cu, b));
      EqProof right = EqProof::trans(
          EqProof::tensor_cong(EqProof::refl(MapExpr::id(a2)),
                               decompose_certificate(v, cv)),
          whisker_left_distrib(a2, cv));

      // read off the whiskered composites for the final reassociation
      Equation er = check_proof(right);
      Equation el = check_proof(left);
      return trans_chain(
          {split, EqProof::comp_cong(right, left),
           prove_flat_equal(MapExpr::comp(er.rhs, el.rhs), target)});
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace

std::vector<RewriteStep> decompose_steps(const MapExpr& f) {
  require_well_typed(f);
  return decompose_steps_rec(f);
}

Decomposition decompose(const MapExpr& f) {
  require_well_typed(f);
  std::vector<RewriteStep> steps = decompose_steps_rec(f);
  const MapExpr target = composite_of_steps(steps, f.dom());
  return {std::move(steps), decompose_certificate(f, target)};
}

SearchResult search_maps(const Term& a, const Term& b, int max_term_size,
                         int max_steps) {
  if (max_term_size < a.size() || max_term_size < b.size())
    throw std::invalid_argument("search_maps: max_term_size below endpoint size");
  if (max_steps < 0) throw std::invalid_argument("search_maps: negative step bound");
  if (!(nf(a) == nf(b))) return {SearchVerdict::NfMismatch, {}, 0};

  struct Origin {
    Term parent;
    RewriteStep step;
  };
  std::unordered_map<Term, Origin> origin;
  std::unordered_set<Term> visited{a};
  std::deque<Term> frontier{a};
  std::size_t explored = 0;

  auto reconstruct = [&](Term t) {
    std::vector<RewriteStep> steps;
    while (!(t == a)) {
      auto it = origin.find(t);
      steps.push_back(it->second.step);
      t = it->second.parent;
    }
    std::reverse(steps.begin(), steps.end());
    return steps;
  };

  if (a == b) return {SearchVerdict::Found, {}, 0};

  for (int level = 0; level < max_steps && !frontier.empty(); ++level) {
    std::deque<Term> next;
    for (const Term& t : frontier) {
      ++explored;
      for (const RewriteStep& s : valid_steps(t)) {
        if (s.rule == StepRule::Rho && t.size() + 2 > max_term_size) continue;
        Term u = apply_step(s);
        if (u.size() > max_term_size) continue;
        if (!visited.insert(u).second) continue;
        origin.emplace(u, Origin{t, s});
        if (u == b)
          return {SearchVerdict::Found, reconstruct(u), explored};
        next.push_back(u);
      }
    }
    frontier = std::move(next);
  }
  return {SearchVerdict::Exhausted, {}, explored};
}

std::string to_string(const Path& p) {
  std::string out;
  for (Dir d : p) out += d == Dir::Left ? 'L' : 'R';
  return out;
}

std::string to_string(const RewriteStep& s) {
  const char* name = s.rule == StepRule::Lam   ? "lam"
                     : s.rule == StepRule::Rho ? "rho"
                                               : "alpha";
  return std::string(name) + "@" + to_string(s.at);
}

}  // namespace skewcat
