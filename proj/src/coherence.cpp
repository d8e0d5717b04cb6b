#include "skewcat/coherence.hpp"

#include <stdexcept>

#include "spine.hpp"

namespace skewcat {

using detail::SpineChain;
using detail::flatten;
using detail::fold_pair_left;
using detail::fold_pair_right;

MapExpr nmx(const Term& a, const NormalForm& n) {
  switch (a.kind()) {
    case Term::Kind::Var:
      return MapExpr::id(Term::tensor(a, emb(n)));
    case Term::Kind::Unit:
      return MapExpr::lam(emb(n));
    case Term::Kind::Tensor: {
      const Term& b = a.left();
      const Term& c = a.right();
      return MapExpr::comp(
          nmx(b, nfx(c, n)),
          MapExpr::comp(MapExpr::tensor(MapExpr::id(b), nmx(c, n)),
                        MapExpr::alpha(b, c, emb(n))));
    }
  }
  throw std::logic_error("unreachable");
}

MapExpr nm(const Term& a) {
  return MapExpr::comp(nmx(a, NormalForm::nil()), MapExpr::rho(a));
}

EqProof main_lemma_proof(const MapExpr& f, const NormalForm& n) {
  require_well_typed(f);
  const Term en = emb(n);
  const MapExpr id_en = MapExpr::id(en);
  const MapExpr target =
      MapExpr::comp(nmx(f.cod(), n), MapExpr::tensor(f, id_en));

  switch (f.kind()) {
    case MapExpr::Kind::Id: {
      // nmx a n == nmx a n . id (x) id
      SpineChain ch(nmx(f.dom(), n));
      ch.rewrite(ch.atoms().size(), 0,
                 EqProof::sym(EqProof::tensor_id(f.index(), en)));
      return ch.finish(target);
    }
    case MapExpr::Kind::Lam: {
      // naturality of lam, then law (c)
      const Term& c = f.index();
      const MapExpr m = nmx(c, n);
      SpineChain ch(nmx(f.dom(), n));
      ch.rewrite(0, 2, EqProof::nat_lam(m));
      ch.rewrite(flatten(m).size(), 2, EqProof::law_c(c, en));
      return ch.finish(target);
    }
    case MapExpr::Kind::Rho: {
      // insert law (b) at the domain end
      const Term& c = f.index();
      SpineChain ch(nmx(c, n));
      ch.rewrite(ch.atoms().size(), 0, EqProof::law_b(c, en));
      return ch.finish(target);
    }
    case MapExpr::Kind::Alpha: {
      // naturality of alpha, law (e), then two functoriality folds
      const Term& c = f.index(0);
      const Term& d = f.index(1);
      const Term& e = f.index(2);
      const NormalForm n1 = nfx(e, n);
      const MapExpr q = nmx(d, n1);
      const MapExpr s = nmx(e, n);
      SpineChain ch(nmx(f.dom(), n));
      const std::size_t i0 = flatten(nmx(c, nfx(d, n1))).size();
      ch.rewrite(i0 + 1, 2,
                 EqProof::trans(
                     EqProof::comp_cong(
                         EqProof::refl(MapExpr::alpha(c, d, emb(n1))),
                         EqProof::tensor_cong(
                             EqProof::sym(EqProof::tensor_id(c, d)),
                             EqProof::refl(s))),
                     EqProof::nat_alpha(MapExpr::id(c), MapExpr::id(d), s)));
      ch.rewrite(i0 + 2, 2, EqProof::law_e(c, d, e, en));
      ch.rewrite(i0 + 1, 2,
                 fold_pair_right(c, MapExpr::tensor(MapExpr::id(d), s),
                                 MapExpr::alpha(d, e, en)));
      ch.rewrite(i0, 2,
                 fold_pair_right(
                     c, q,
                     MapExpr::comp(MapExpr::tensor(MapExpr::id(d), s),
                                   MapExpr::alpha(d, e, en))));
      return ch.finish(target);
    }
    case MapExpr::Kind::Comp: {
      // chain the two induction hypotheses, then fold the whiskers
      const MapExpr& g = f.first();
      const MapExpr& h = f.second();
      SpineChain ch(nmx(f.dom(), n));
      ch.rewrite(0, ch.atoms().size(), main_lemma_proof(h, n));
      ch.rewrite(0, flatten(nmx(h.cod(), n)).size(), main_lemma_proof(g, n));
      ch.rewrite(flatten(nmx(g.cod(), n)).size(), 2, fold_pair_left(g, h, en));
      return ch.finish(target);
    }
    case MapExpr::Kind::Tensor: {
      // middle-exchange with the induction hypotheses, then naturality of alpha
      const MapExpr& g = f.first();
      const MapExpr& h = f.second();
      const Term a1 = g.dom(), b1 = g.cod();
      const Term a2 = h.dom(), b2 = h.cod();
      const NormalForm n1 = nfx(a2, n);
      const Term en1 = emb(n1);
      const MapExpr h_nm = nmx(a2, n);
      SpineChain ch(nmx(f.dom(), n));
      const std::size_t i0 = flatten(nmx(a1, n1)).size();
      ch.rewrite(0, i0, main_lemma_proof(g, n1));
      const std::size_t j0 = flatten(nmx(b1, n1)).size();
      ch.rewrite(
          j0, 2,
          trans_chain(
              {EqProof::sym(EqProof::tensor_comp(g, MapExpr::id(a1),
                                                 MapExpr::id(en1), h_nm)),
               EqProof::tensor_cong(EqProof::sym(EqProof::id_r(g)),
                                    EqProof::id_l(h_nm)),
               EqProof::tensor_cong(EqProof::sym(EqProof::id_l(g)),
                                    main_lemma_proof(h, n)),
               EqProof::tensor_comp(MapExpr::id(b1), g, nmx(b2, n),
                                    MapExpr::tensor(h, id_en))}));
      ch.rewrite(j0 + 1, 2,
                 EqProof::sym(EqProof::nat_alpha(g, h, id_en)));
      return ch.finish(target);
    }
  }
  throw std::logic_error("unreachable");
}

EqProof nm_natural_proof(const MapExpr& f) {
  require_well_typed(f);
  const NormalForm nil;
  SpineChain ch(nm(f.dom()));
  ch.rewrite(0, ch.atoms().size() - 1, main_lemma_proof(f, nil));
  const std::size_t j0 = flatten(nmx(f.cod(), nil)).size();
  ch.rewrite(j0, 2, EqProof::sym(EqProof::nat_rho(f)));
  return ch.finish(MapExpr::comp(nm(f.cod()), f));
}

EqProof nm_emb_id_proof(const NormalForm& n) {
  if (n.is_nil()) return EqProof::law_a();

  const Variable head = n.vars().front();
  const NormalForm tail =
      NormalForm::of({n.vars().begin() + 1, n.vars().end()});
  const Term x = Term::var(head);
  const Term et = emb(tail);
  const MapExpr inner = nmx(et, NormalForm::nil());

  SpineChain ch(nm(emb(n)));
  ch.rewrite(1, 2, EqProof::law_d(x, et));
  ch.rewrite(0, 2, fold_pair_right(x, inner, MapExpr::rho(et)));
  // wrap the induction hypothesis under id_x (x) -
  ch.rewrite(0, 1,
             EqProof::tensor_cong(EqProof::refl(MapExpr::id(x)),
                                  nm_emb_id_proof(tail)));
  ch.rewrite(0, 1, EqProof::tensor_id(x, et));
  return ch.finish(MapExpr::id(emb(n)));
}

EqProof coherence_proof(const MapExpr& f, const NormalForm& n) {
  require_well_typed(f);
  if (!(f.cod() == emb(n)))
    throw std::invalid_argument("coherence_proof: codomain " + to_string(f.cod()) +
                                " is not emb " + to_string(n));
  return trans_chain({nm_natural_proof(f),
                      EqProof::comp_cong(nm_emb_id_proof(n), EqProof::refl(f)),
                      EqProof::id_l(f)});
}

EqProof coherence_proof(const MapExpr& f) {
  require_well_typed(f);
  auto n = is_emb_image(f.cod());
  if (!n)
    throw std::invalid_argument("coherence_proof: codomain " + to_string(f.cod()) +
                                " is not a normal form");
  return coherence_proof(f, *n);
}

std::optional<EqProof> decide_equal_into_nf(const MapExpr& f, const MapExpr& g) {
  require_well_typed(f);
  require_well_typed(g);
  if (!(f.dom() == g.dom()) || !(f.cod() == g.cod()))
    throw std::invalid_argument("decide_equal_into_nf: maps are not parallel");
  auto n = is_emb_image(f.cod());
  if (!n) return std::nullopt;
  return EqProof::trans(EqProof::sym(coherence_proof(f, *n)),
                        coherence_proof(g, *n));
}

MapExpr nmxr(const Term& a, const RevNormalForm& r) {
  switch (a.kind()) {
    case Term::Kind::Var:
      return MapExpr::id(Term::tensor(embrev(r), a));
    case Term::Kind::Unit:
      return MapExpr::rho(embrev(r));
    case Term::Kind::Tensor: {
      const Term& b = a.left();
      const Term& c = a.right();
      return MapExpr::comp(
          MapExpr::alpha(embrev(r), b, c),
          MapExpr::comp(MapExpr::tensor(nmxr(b, r), MapExpr::id(c)),
                        nmxr(c, nfxr(b, r))));
    }
  }
  throw std::logic_error("unreachable");
}

MapExpr nmrev(const Term& a) {
  return MapExpr::comp(MapExpr::lam(a), nmxr(a, RevNormalForm::nil()));
}

EqProof main_lemma_rev_proof(const MapExpr& f, const RevNormalForm& r) {
  require_well_typed(f);
  const Term e = embrev(r);
  const MapExpr id_e = MapExpr::id(e);
  const MapExpr target =
      MapExpr::comp(MapExpr::tensor(id_e, f), nmxr(f.dom(), r));

  switch (f.kind()) {
    case MapExpr::Kind::Id: {
      SpineChain ch(nmxr(f.cod(), r));
      ch.rewrite(0, 0, EqProof::sym(EqProof::tensor_id(e, f.index())));
      return ch.finish(target);
    }
    case MapExpr::Kind::Lam: {
      // law (b) inserted at the codomain end
      const Term& c = f.index();
      SpineChain ch(nmxr(c, r));
      ch.rewrite(0, 0, EqProof::law_b(e, c));
      return ch.finish(target);
    }
    case MapExpr::Kind::Rho: {
      // naturality of rho, then law (d)
      const Term& c = f.index();
      const MapExpr m = nmxr(c, r);
      SpineChain ch(nmxr(f.cod(), r));
      ch.rewrite(1, 2, EqProof::sym(EqProof::nat_rho(m)));
      ch.rewrite(0, 2, EqProof::law_d(e, c));
      return ch.finish(target);
    }
    case MapExpr::Kind::Alpha: {
      // run the chain from the target side; law (e) and naturality of alpha
      const Term& c = f.index(0);
      const Term& d = f.index(1);
      const Term& e2 = f.index(2);
      const MapExpr p = nmxr(c, r);
      const RevNormalForm r1 = nfxr(c, r);
      const MapExpr q = nmxr(d, r1);
      const MapExpr id_e2 = MapExpr::id(e2);

      SpineChain ch(target);
      {
        // distribute - (x) id_e2 over the three factors of nmxr (c(x)d) r
        const MapExpr a0 = MapExpr::alpha(e, c, d);
        const MapExpr a1 = MapExpr::tensor(p, MapExpr::id(d));
        const MapExpr tail = MapExpr::comp(a1, q);
        const MapExpr lw = nmxr(Term::tensor(c, d), r);  // == a0 . a1 . q
        EqProof dist = trans_chain(
            {EqProof::tensor_cong(EqProof::refl(lw),
                                  EqProof::sym(EqProof::id_l(id_e2))),
             EqProof::tensor_comp(a0, tail, id_e2, id_e2),
             EqProof::comp_cong(
                 EqProof::refl(MapExpr::tensor(a0, id_e2)),
                 trans_chain(
                     {EqProof::tensor_cong(EqProof::refl(tail),
                                           EqProof::sym(EqProof::id_l(id_e2))),
                      EqProof::tensor_comp(a1, q, id_e2, id_e2)}))});
        ch.rewrite(2, 1, dist);
      }
      ch.rewrite(0, 3, EqProof::sym(EqProof::law_e(e, c, d, e2)));
      ch.rewrite(1, 2, EqProof::nat_alpha(p, MapExpr::id(d), id_e2));
      ch.rewrite(1, 1,
                 EqProof::tensor_cong(EqProof::refl(p),
                                      EqProof::tensor_id(d, e2)));
      return EqProof::sym(ch.finish(nmxr(f.cod(), r)));
    }
    case MapExpr::Kind::Comp: {
      const MapExpr& g = f.first();
      const MapExpr& h = f.second();
      SpineChain ch(nmxr(f.cod(), r));
      ch.rewrite(0, ch.atoms().size(), main_lemma_rev_proof(g, r));
      ch.rewrite(1, flatten(nmxr(g.dom(), r)).size(),
                 main_lemma_rev_proof(h, r));
      ch.rewrite(0, 2, fold_pair_right(e, g, h));
      return ch.finish(target);
    }
    case MapExpr::Kind::Tensor: {
      const MapExpr& g = f.first();
      const MapExpr& h = f.second();
      const Term a1 = g.dom(), b1 = g.cod();
      const Term a2 = h.dom(), b2 = h.cod();
      const RevNormalForm r1 = nfxr(b1, r);
      const Term ep = embrev(r1);
      const MapExpr p_b = nmxr(b1, r);

      SpineChain ch(nmxr(f.cod(), r));
      ch.rewrite(2, ch.atoms().size() - 2, main_lemma_rev_proof(h, r1));
      ch.rewrite(
          1, 2,
          trans_chain(
              {EqProof::sym(EqProof::tensor_comp(p_b, MapExpr::id(ep),
                                                 MapExpr::id(b2), h)),
               EqProof::tensor_cong(EqProof::sym(EqProof::id_r(p_b)),
                                    EqProof::id_l(h)),
               EqProof::tensor_cong(main_lemma_rev_proof(g, r),
                                    EqProof::id_r(h)),
               EqProof::tensor_comp(MapExpr::tensor(id_e, g), nmxr(a1, r), h,
                                    MapExpr::id(a2))}));
      ch.rewrite(0, 2, EqProof::nat_alpha(id_e, g, h));
      return ch.finish(target);
    }
  }
  throw std::logic_error("unreachable");
}

EqProof nmrev_natural_proof(const MapExpr& f) {
  require_well_typed(f);
  const RevNormalForm nil;
  SpineChain ch(nmrev(f.cod()));
  ch.rewrite(1, ch.atoms().size() - 1, main_lemma_rev_proof(f, nil));
  ch.rewrite(0, 2, EqProof::nat_lam(f));
  return ch.finish(MapExpr::comp(f, nmrev(f.dom())));
}

EqProof nmrev_embrev_id_proof(const RevNormalForm& r) {
  if (r.is_nil()) return EqProof::law_a();

  const Variable last = r.vars().back();
  const RevNormalForm init =
      RevNormalForm::of({r.vars().begin(), r.vars().end() - 1});
  const Term x = Term::var(last);
  const Term ei = embrev(init);
  const MapExpr inner = nmxr(ei, RevNormalForm::nil());

  SpineChain ch(nmrev(embrev(r)));
  ch.rewrite(0, 2, EqProof::law_c(ei, x));
  ch.rewrite(0, 2, fold_pair_left(MapExpr::lam(ei), inner, x));
  ch.rewrite(0, 1,
             EqProof::tensor_cong(nmrev_embrev_id_proof(init),
                                  EqProof::refl(MapExpr::id(x))));
  ch.rewrite(0, 1, EqProof::tensor_id(ei, x));
  return ch.finish(MapExpr::id(embrev(r)));
}

EqProof coherence_proof_rev(const MapExpr& f, const RevNormalForm& r) {
  require_well_typed(f);
  if (!(f.dom() == embrev(r)))
    throw std::invalid_argument("coherence_proof_rev: domain " +
                                to_string(f.dom()) + " is not embrev " +
                                to_string(r));
  return trans_chain(
      {nmrev_natural_proof(f),
       EqProof::comp_cong(EqProof::refl(f), nmrev_embrev_id_proof(r)),
       EqProof::sym(EqProof::id_r(f))});
}

EqProof coherence_proof_rev(const MapExpr& f) {
  require_well_typed(f);
  auto r = is_embrev_image(f.dom());
  if (!r)
    throw std::invalid_argument("coherence_proof_rev: domain " +
                                to_string(f.dom()) +
                                " is not a reverse normal form");
  return coherence_proof_rev(f, *r);
}

std::optional<EqProof> decide_equal_from_rev(const MapExpr& f, const MapExpr& g) {
  require_well_typed(f);
  require_well_typed(g);
  if (!(f.dom() == g.dom()) || !(f.cod() == g.cod()))
    throw std::invalid_argument("decide_equal_from_rev: maps are not parallel");
  auto r = is_embrev_image(f.dom());
  if (!r) return std::nullopt;
  return EqProof::trans(EqProof::sym(coherence_proof_rev(f, *r)),
                        coherence_proof_rev(g, *r));
}

}  // namespace skewcat
