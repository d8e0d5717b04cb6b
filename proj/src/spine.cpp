#include "spine.hpp"

#include <cassert>
#include <stdexcept>

namespace skewcat::detail {

namespace {

void flatten_into(const MapExpr& f, std::vector<MapExpr>& out) {
  switch (f.kind()) {
    case MapExpr::Kind::Id:
      return;
    case MapExpr::Kind::Comp:
      flatten_into(f.first(), out);
      flatten_into(f.second(), out);
      return;
    default:
      out.push_back(f);
      return;
  }
}

/// Codomain of the composite a spine denotes.
Term spine_cod(const std::vector<MapExpr>& atoms, const Term& domain) {
  return atoms.empty() ? domain : atoms.front().cod();
}

}  // namespace

std::vector<MapExpr> flatten(const MapExpr& f) {
  std::vector<MapExpr> out;
  flatten_into(f, out);
  return out;
}

MapExpr spine_of(const std::vector<MapExpr>& atoms, const Term& domain) {
  if (atoms.empty()) return MapExpr::id(domain);
  MapExpr acc = atoms.back();
  for (auto it = atoms.rbegin() + 1; it != atoms.rend(); ++it)
    acc = MapExpr::comp(*it, acc);
  return acc;
}

EqProof to_spine(const MapExpr& f) {
  switch (f.kind()) {
    case MapExpr::Kind::Comp: {
      const MapExpr& g = f.first();
      const MapExpr& h = f.second();
      EqProof cong = EqProof::comp_cong(to_spine(g), to_spine(h));
      return EqProof::trans(cong, append_spines(flatten(g), flatten(h), h.dom()));
    }
    default:
      return EqProof::refl(f);
  }
}

EqProof append_spines(const std::vector<MapExpr>& l1,
                      const std::vector<MapExpr>& l2, const Term& d2) {
  const MapExpr spine2 = spine_of(l2, d2);
  if (l1.empty()) return EqProof::id_l(spine2);
  if (l1.size() == 1) {
    if (l2.empty()) return EqProof::sym(EqProof::id_r(l1[0]));
    return EqProof::refl(MapExpr::comp(l1[0], spine2));
  }
  const std::vector<MapExpr> rest(l1.begin() + 1, l1.end());
  const Term mid = spine_cod(l2, d2);
  return EqProof::trans(
      EqProof::comp_assoc(l1[0], spine_of(rest, mid), spine2),
      EqProof::comp_cong(EqProof::refl(l1[0]), append_spines(rest, l2, d2)));
}

SpineChain::SpineChain(const MapExpr& start)
    : start_(start), domain_(start.dom()), atoms_(flatten(start)) {
  steps_.push_back(to_spine(start));
}

Term SpineChain::cut_object(std::size_t i) const {
  return i < atoms_.size() ? atoms_[i].cod() : domain_;
}

void SpineChain::rewrite(std::size_t i, std::size_t len, const EqProof& step) {
  if (i + len > atoms_.size())
    throw std::invalid_argument("spine rewrite: segment out of range");
  const Equation eq = check_proof(step);

  const std::vector<MapExpr> pre(atoms_.begin(), atoms_.begin() + i);
  const std::vector<MapExpr> seg(atoms_.begin() + i, atoms_.begin() + i + len);
  const std::vector<MapExpr> post(atoms_.begin() + i + len, atoms_.end());
  {
    std::vector<MapExpr> lhs_flat = flatten(eq.lhs);
    if (lhs_flat.size() != seg.size())
      throw std::invalid_argument("spine rewrite: step lhs does not match segment");
    for (std::size_t k = 0; k < seg.size(); ++k)
      if (!(lhs_flat[k] == seg[k]))
        throw std::invalid_argument("spine rewrite: step lhs does not match segment");
  }

  const Term seg_dom = cut_object(i + len);
  const MapExpr seg_spine = spine_of(seg, seg_dom);
  EqProof on_seg =
      seg_spine == eq.lhs
          ? step
          : EqProof::trans(EqProof::sym(to_spine(eq.lhs)), step);

  std::vector<MapExpr> seg_post = seg;
  seg_post.insert(seg_post.end(), post.begin(), post.end());
  const std::vector<MapExpr> repl = flatten(eq.rhs);
  std::vector<MapExpr> repl_post = repl;
  repl_post.insert(repl_post.end(), post.begin(), post.end());

  const MapExpr pre_spine = spine_of(pre, cut_object(i));
  const MapExpr post_spine = spine_of(post, domain_);
  auto in_tail = [&](const EqProof& p) {
    return EqProof::comp_cong(EqProof::refl(pre_spine), p);
  };

  std::vector<EqProof> pieces;
  pieces.push_back(EqProof::sym(append_spines(pre, seg_post, domain_)));
  pieces.push_back(in_tail(EqProof::sym(append_spines(seg, post, domain_))));
  pieces.push_back(in_tail(EqProof::comp_cong(on_seg, EqProof::refl(post_spine))));
  pieces.push_back(in_tail(EqProof::comp_cong(to_spine(eq.rhs), EqProof::refl(post_spine))));
  pieces.push_back(in_tail(append_spines(repl, post, domain_)));
  pieces.push_back(append_spines(pre, repl_post, domain_));
  steps_.push_back(trans_chain(pieces));

  std::vector<MapExpr> next = pre;
  next.insert(next.end(), repl.begin(), repl.end());
  next.insert(next.end(), post.begin(), post.end());
  atoms_ = std::move(next);
}

EqProof SpineChain::finish(const MapExpr& target) const {
  {
    std::vector<MapExpr> tf = flatten(target);
    if (tf.size() != atoms_.size())
      throw std::invalid_argument("spine finish: target spine mismatch");
    for (std::size_t k = 0; k < tf.size(); ++k)
      if (!(tf[k] == atoms_[k]))
        throw std::invalid_argument("spine finish: target spine mismatch");
  }
  std::vector<EqProof> all = steps_;
  all.push_back(EqProof::sym(to_spine(target)));
  return trans_chain(all);
}

EqProof fold_pair_right(const Term& c, const MapExpr& x, const MapExpr& y) {
  const MapExpr idc = MapExpr::id(c);
  return EqProof::trans(
      EqProof::sym(EqProof::tensor_comp(idc, idc, x, y)),
      EqProof::tensor_cong(EqProof::id_l(idc),
                           EqProof::refl(MapExpr::comp(x, y))));
}

EqProof fold_pair_left(const MapExpr& x, const MapExpr& y, const Term& c) {
  const MapExpr idc = MapExpr::id(c);
  return EqProof::trans(
      EqProof::sym(EqProof::tensor_comp(x, y, idc, idc)),
      EqProof::tensor_cong(EqProof::refl(MapExpr::comp(x, y)),
                           EqProof::id_l(idc)));
}

}  // namespace skewcat::detail
