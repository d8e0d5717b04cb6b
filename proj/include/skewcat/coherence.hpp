#pragma once

#include <optional>

#include "skewcat/kernel.hpp"
#include "skewcat/map_expr.hpp"
#include "skewcat/term.hpp"

namespace skewcat {

/// Canonical map a (x) emb n => emb (nfx a n):
///   nmx X n       = id
///   nmx I n       = lam
///   nmx (a(x)b) n = nmx a (nfx b n) . id (x) nmx b n . alpha
/// (composition right-associated).
MapExpr nmx(const Term& a, const NormalForm& n);

/// Canonical normalizing map a => emb (nf a):  nm a = nmx a J . rho.
MapExpr nm(const Term& a);

/// Main lemma: for well-typed f : A => B, a kernel-checkable proof of
///   nmx A n  ==  nmx B n . f (x) id_(emb n).
EqProof main_lemma_proof(const MapExpr& f, const NormalForm& n);

/// Naturality of nm: for well-typed f : A => B, a proof of
///   nm A  ==  nm B . f.
EqProof nm_natural_proof(const MapExpr& f);

/// nm (emb n) == id_(emb n).
EqProof nm_emb_id_proof(const NormalForm& n);

/// Main theorem: for well-typed f with cod f == emb n, a proof of
///   nm (dom f) == f.
/// Throws std::invalid_argument when cod f differs from emb n.
EqProof coherence_proof(const MapExpr& f, const NormalForm& n);
EqProof coherence_proof(const MapExpr& f);  // infers n; cod f must be an emb image

/// For parallel f, g into an emb image, a checked proof of f == g
/// (Trans(Sym(coherence f), coherence g)); nullopt when the shared codomain is
/// not an emb image (no judgment of inequality). Throws on typing errors or
/// non-parallel inputs.
std::optional<EqProof> decide_equal_into_nf(const MapExpr& f, const MapExpr& g);

/// Reverse-dual canonical map emb' (nfxr a r) => emb' r (x) a:
///   nmxr X r       = id
///   nmxr I r       = rho
///   nmxr (b(x)c) r = alpha . nmxr b r (x) id . nmxr c (nfxr b r)
MapExpr nmxr(const Term& a, const RevNormalForm& r);

/// Dual normalizing map emb' (nfrev a) => a:  nmrev a = lam . nmxr a J'.
MapExpr nmrev(const Term& a);

/// Dual main lemma: nmxr B r == id_(emb' r) (x) f . nmxr A r.
EqProof main_lemma_rev_proof(const MapExpr& f, const RevNormalForm& r);

/// Dual naturality: nmrev B == f . nmrev A.
EqProof nmrev_natural_proof(const MapExpr& f);

/// nmrev (emb' r) == id_(emb' r).
EqProof nmrev_embrev_id_proof(const RevNormalForm& r);

/// Dual main theorem: for well-typed f with dom f == emb' r, a proof of
///   nmrev (cod f) == f.
/// Throws std::invalid_argument when dom f differs from emb' r.
EqProof coherence_proof_rev(const MapExpr& f, const RevNormalForm& r);
EqProof coherence_proof_rev(const MapExpr& f);

/// Dual decision: parallel maps out of an emb' image are proven equal.
std::optional<EqProof> decide_equal_from_rev(const MapExpr& f, const MapExpr& g);

}  // namespace skewcat
