#include "doctest.h"
#include "enumerate.hpp"
#include "skewcat/errors.hpp"
#include "skewcat/kernel.hpp"
#include "skewcat/parse.hpp"

using namespace skewcat;

namespace {
const Term I = Term::unit();
const Term X = Term::var("X");
const Term Y = Term::var("Y");
const Term Z = Term::var("Z");
}  // namespace

TEST_CASE("dom and cod follow the typing rules") {
  CHECK(MapExpr::lam(X).dom() == Term::tensor(I, X));
  CHECK(MapExpr::lam(X).cod() == X);
  CHECK(MapExpr::rho(I).cod() == Term::tensor(I, I));
  CHECK(MapExpr::alpha(X, I, Y).dom() ==
        Term::tensor(Term::tensor(X, I), Y));
  CHECK(MapExpr::alpha(X, I, Y).cod() ==
        Term::tensor(X, Term::tensor(I, Y)));
}

TEST_CASE("check_map accepts composable chains and flags the rest") {
  CHECK(!check_map(MapExpr::id(I)).has_value());
  // the law (a) composite at the unit
  CHECK(!check_map(MapExpr::comp(MapExpr::lam(I), MapExpr::rho(I))).has_value());
  // lam_X . rho_X: I (x) X  !=  X (x) I
  auto err = check_map(MapExpr::comp(MapExpr::lam(X), MapExpr::rho(X)));
  REQUIRE(err.has_value());
  CHECK(err->find("(I * X)") != std::string::npos);
  CHECK(err->find("(X * I)") != std::string::npos);
}

TEST_CASE("axiom nodes rebuild the displayed equations") {
  Equation a = check_proof(EqProof::law_a());
  CHECK(a.lhs == MapExpr::comp(MapExpr::lam(I), MapExpr::rho(I)));
  CHECK(a.rhs == MapExpr::id(I));

  Equation b = check_proof(EqProof::law_b(X, Y));
  CHECK(b.lhs == MapExpr::id(Term::tensor(X, Y)));
  CHECK(b.rhs ==
        MapExpr::comp(MapExpr::tensor(MapExpr::id(X), MapExpr::lam(Y)),
                      MapExpr::comp(MapExpr::alpha(X, I, Y),
                                    MapExpr::tensor(MapExpr::rho(X),
                                                    MapExpr::id(Y)))));

  Equation c = check_proof(EqProof::law_c(X, Y));
  CHECK(c.lhs == MapExpr::comp(MapExpr::lam(Term::tensor(X, Y)),
                               MapExpr::alpha(I, X, Y)));
  CHECK(c.rhs == MapExpr::tensor(MapExpr::lam(X), MapExpr::id(Y)));

  Equation d = check_proof(EqProof::law_d(X, Y));
  CHECK(d.lhs == MapExpr::comp(MapExpr::alpha(X, Y, I),
                               MapExpr::rho(Term::tensor(X, Y))));
  CHECK(d.rhs == MapExpr::tensor(MapExpr::id(X), MapExpr::rho(Y)));

  Equation e = check_proof(EqProof::law_e(X, Y, Z, I));
  CHECK(e.lhs == MapExpr::comp(MapExpr::alpha(X, Y, Term::tensor(Z, I)),
                               MapExpr::alpha(Term::tensor(X, Y), Z, I)));
}

TEST_CASE("structural rules") {
  Equation r = check_proof(EqProof::refl(MapExpr::id(X)));
  CHECK(r.lhs == MapExpr::id(X));
  CHECK(r.rhs == MapExpr::id(X));

  // sym then trans cancel law (a) against itself
  Equation t = check_proof(
      EqProof::trans(EqProof::sym(EqProof::law_a()), EqProof::law_a()));
  CHECK(t.lhs == MapExpr::id(I));
  CHECK(t.rhs == MapExpr::id(I));

  Equation n = check_proof(EqProof::nat_rho(MapExpr::lam(X)));
  CHECK(n.lhs == MapExpr::comp(MapExpr::rho(X), MapExpr::lam(X)));
  CHECK(n.rhs ==
        MapExpr::comp(MapExpr::tensor(MapExpr::lam(X), MapExpr::id(I)),
                      MapExpr::rho(Term::tensor(I, X))));
}

TEST_CASE("kernel rejects malformed derivations") {
  // trans with mismatched middle
  CHECK_THROWS_AS(check_proof(EqProof::trans(EqProof::refl(MapExpr::id(X)),
                                             EqProof::refl(MapExpr::id(Y)))),
                  KernelError);
  // comp-cong whose sides do not compose
  CHECK_THROWS_AS(check_proof(EqProof::comp_cong(
                      EqProof::refl(MapExpr::lam(X)),
                      EqProof::refl(MapExpr::rho(X)))),
                  KernelError);
  // refl of an ill-typed map
  CHECK_THROWS_AS(check_proof(EqProof::refl(
                      MapExpr::comp(MapExpr::lam(X), MapExpr::rho(X)))),
                  KernelError);
}

TEST_CASE("proof serialization round-trips") {
  std::vector<EqProof> proofs{
      EqProof::law_a(),
      EqProof::law_e(X, Term::tensor(Y, I), Z, I),
      EqProof::trans(EqProof::sym(EqProof::law_a()), EqProof::law_a()),
      EqProof::comp_cong(EqProof::refl(MapExpr::lam(X)),
                         EqProof::nat_lam(MapExpr::id(X))),
      EqProof::tensor_comp(MapExpr::lam(X), MapExpr::id(Term::tensor(I, X)),
                           MapExpr::rho(Y), MapExpr::id(Y)),
  };
  for (const EqProof& p : proofs) {
    EqProof q = parse_proof(to_sexpr(p));
    CHECK(to_sexpr(q) == to_sexpr(p));
    CHECK(check_proof(q) == check_proof(p));
  }
}

TEST_CASE("map syntax size is constructors plus index nodes") {
  CHECK(MapExpr::id(X).size() == 2);
  CHECK(MapExpr::alpha(X, Y, Z).size() == 4);
  CHECK(MapExpr::comp(MapExpr::lam(X), MapExpr::rho(X)).size() == 5);
}

TEST_CASE("enumerated maps are well-typed and within the size bound") {
  auto maps = skewcat::testing::enumerate_maps(6, 3);
  CHECK(maps.size() > 1000);
  for (const MapExpr& f : maps) {
    CHECK(f.size() <= 6);
    CHECK(!check_map(f).has_value());
  }
}
