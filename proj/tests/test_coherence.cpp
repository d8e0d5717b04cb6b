#include "doctest.h"
#include "enumerate.hpp"
#include "skewcat/coherence.hpp"

using namespace skewcat;
using testing::enumerate_maps;
using testing::enumerate_normal_forms;
using testing::enumerate_terms;

namespace {
const Term I = Term::unit();
const Term X = Term::var("X");
const Term Y = Term::var("Y");
const Variable vX("X");
const Variable vY("Y");

Equation main_lemma_contract(const MapExpr& f, const NormalForm& n) {
  return {nmx(f.dom(), n),
          MapExpr::comp(nmx(f.cod(), n),
                        MapExpr::tensor(f, MapExpr::id(emb(n))))};
}
}  // namespace

TEST_CASE("nmx follows its defining equations") {
  CHECK(nmx(X, NormalForm::of({vY})) ==
        MapExpr::id(Term::tensor(X, emb(NormalForm::of({vY})))));
  CHECK(nmx(I, NormalForm::nil()) == MapExpr::lam(I));
  // tensor clause, right-associated
  CHECK(nmx(Term::tensor(X, I), NormalForm::nil()) ==
        MapExpr::comp(
            MapExpr::id(Term::tensor(X, I)),
            MapExpr::comp(MapExpr::tensor(MapExpr::id(X), MapExpr::lam(I)),
                          MapExpr::alpha(X, I, I))));
}

TEST_CASE("nm has the contracted endpoints") {
  CHECK(nm(I) == MapExpr::comp(MapExpr::lam(I), MapExpr::rho(I)));
  CHECK(nm(X) ==
        MapExpr::comp(MapExpr::id(Term::tensor(X, I)), MapExpr::rho(X)));
  const Term t = Term::tensor(I, X);
  CHECK(nm(t).dom() == t);
  CHECK(nm(t).cod() == Term::tensor(X, I));
}

TEST_CASE("nmx and nm are well-typed with the right endpoints, exhaustively") {
  const auto nfs = enumerate_normal_forms(2, 2);
  for (const Term& a : enumerate_terms(3, 2)) {
    for (const NormalForm& n : nfs) {
      MapExpr m = nmx(a, n);
      CHECK(!check_map(m).has_value());
      CHECK(m.dom() == Term::tensor(a, emb(n)));
      CHECK(m.cod() == emb(nfx(a, n)));
    }
    MapExpr c = nm(a);
    CHECK(!check_map(c).has_value());
    CHECK(c.dom() == a);
    CHECK(c.cod() == emb(nf(a)));
  }
}

TEST_CASE("main lemma proofs check with the exact conclusion") {
  const NormalForm nil;
  SUBCASE("spec cases") {
    for (const MapExpr& f :
         {MapExpr::id(X), MapExpr::lam(X),
          MapExpr::alpha(X, Y, Term::var("Z"))}) {
      Equation eq = check_proof(main_lemma_proof(f, nil));
      CHECK(eq == main_lemma_contract(f, nil));
    }
  }
  SUBCASE("exhaustive over small maps and normal forms") {
    const auto nfs = enumerate_normal_forms(2, 2);
    for (const MapExpr& f : enumerate_maps(5, 2))
      for (const NormalForm& n : nfs) {
        Equation eq = check_proof(main_lemma_proof(f, n));
        CHECK(eq == main_lemma_contract(f, n));
      }
  }
}

TEST_CASE("naturality of nm") {
  for (const MapExpr& f :
       {MapExpr::id(I), MapExpr::rho(X), MapExpr::lam(I)}) {
    Equation eq = check_proof(nm_natural_proof(f));
    CHECK(eq.lhs == nm(f.dom()));
    CHECK(eq.rhs == MapExpr::comp(nm(f.cod()), f));
  }
}

TEST_CASE("nm at an embedded normal form is provably the identity") {
  for (const NormalForm& n : enumerate_normal_forms(4, 3)) {
    Equation eq = check_proof(nm_emb_id_proof(n));
    CHECK(eq.lhs == nm(emb(n)));
    CHECK(eq.rhs == MapExpr::id(emb(n)));
  }
  // the nil case is exactly law (a)
  CHECK(nm_emb_id_proof(NormalForm::nil()).rule() == EqProof::Rule::LawA);
}

TEST_CASE("coherence proof: nm (dom f) == f for maps into normal forms") {
  SUBCASE("spec cases") {
    const MapExpr f = MapExpr::comp(MapExpr::lam(I), MapExpr::rho(I));
    Equation eq = check_proof(coherence_proof(f, NormalForm::nil()));
    CHECK(eq.lhs == nm(I));
    CHECK(eq.rhs == f);

    const MapExpr g = MapExpr::rho(X);
    Equation eg = check_proof(coherence_proof(g, NormalForm::of({vX})));
    CHECK(eg.lhs == nm(X));
    CHECK(eg.rhs == g);
  }
  SUBCASE("codomain must embed the given normal form") {
    CHECK_THROWS_AS(coherence_proof(MapExpr::lam(X), NormalForm::of({vX})),
                    std::invalid_argument);
  }
}

TEST_CASE("decide_equal_into_nf") {
  SUBCASE("proves the two normalizing maps of I (x) I equal") {
    auto p = decide_equal_into_nf(nm(Term::tensor(I, I)), MapExpr::lam(I));
    REQUIRE(p.has_value());
    Equation eq = check_proof(*p);
    CHECK(eq.lhs == nm(Term::tensor(I, I)));
    CHECK(eq.rhs == MapExpr::lam(I));
  }
  SUBCASE("not applicable outside emb images, even for equal maps") {
    CHECK(!decide_equal_into_nf(MapExpr::id(X), MapExpr::id(X)).has_value());
    // id vs rho . lam at I (x) I: the codomain is not an emb image
    CHECK(!decide_equal_into_nf(
               MapExpr::id(Term::tensor(I, I)),
               MapExpr::comp(MapExpr::rho(I), MapExpr::lam(I)))
               .has_value());
  }
  SUBCASE("rejects non-parallel pairs") {
    CHECK_THROWS_AS(decide_equal_into_nf(MapExpr::id(X), MapExpr::id(Y)),
                    std::invalid_argument);
  }
}

TEST_CASE("reverse duals") {
  SUBCASE("nmxr and nmrev endpoints") {
    for (const Term& a : enumerate_terms(3, 2)) {
      MapExpr m = nmrev(a);
      CHECK(!check_map(m).has_value());
      CHECK(m.dom() == embrev(nfrev(a)));
      CHECK(m.cod() == a);
    }
    CHECK(nmrev(I) == MapExpr::comp(MapExpr::lam(I), MapExpr::rho(I)));
  }
  SUBCASE("dual main lemma, exhaustively over small maps") {
    const RevNormalForm r = RevNormalForm::of({vX});
    for (const MapExpr& f : enumerate_maps(5, 2)) {
      Equation eq = check_proof(main_lemma_rev_proof(f, r));
      CHECK(eq.lhs == nmxr(f.cod(), r));
      CHECK(eq.rhs == MapExpr::comp(
                          MapExpr::tensor(MapExpr::id(embrev(r)), f),
                          nmxr(f.dom(), r)));
    }
  }
  SUBCASE("nmrev at an embedded reverse normal form is the identity") {
    for (const NormalForm& n : enumerate_normal_forms(4, 3)) {
      const RevNormalForm r = RevNormalForm::of(n.vars());
      Equation eq = check_proof(nmrev_embrev_id_proof(r));
      CHECK(eq.lhs == nmrev(embrev(r)));
      CHECK(eq.rhs == MapExpr::id(embrev(r)));
    }
  }
  SUBCASE("parallel maps out of a reverse normal form are proven equal") {
    // two maps (I * X) => (X * I)
    const MapExpr f = MapExpr::comp(MapExpr::rho(X), MapExpr::lam(X));
    const MapExpr g = MapExpr::comp(
        MapExpr::rho(X), MapExpr::comp(MapExpr::id(X), MapExpr::lam(X)));
    auto p = decide_equal_from_rev(f, g);
    REQUIRE(p.has_value());
    Equation eq = check_proof(*p);
    CHECK(eq.lhs == f);
    CHECK(eq.rhs == g);
  }
  SUBCASE("domain error when the domain is not a reverse normal form") {
    CHECK_THROWS_AS(coherence_proof_rev(MapExpr::id(X)),
                    std::invalid_argument);
    CHECK(!decide_equal_from_rev(MapExpr::id(X), MapExpr::id(X)).has_value());
  }
}
