#include "doctest.h"
#include "enumerate.hpp"
#include "skewcat/coherence.hpp"
#include "skewcat/rewriting.hpp"

using namespace skewcat;
using testing::enumerate_maps;
using testing::enumerate_terms;

namespace {
const Term I = Term::unit();
const Term X = Term::var("X");
const Term Y = Term::var("Y");
}  // namespace

TEST_CASE("apply_step contracts the addressed redex") {
  CHECK(apply_step({StepRule::Lam, {}, Term::tensor(I, X)}) == X);
  CHECK(apply_step({StepRule::Rho, {Dir::Left}, Term::tensor(X, Y)}) ==
        Term::tensor(Term::tensor(X, I), Y));
  CHECK_THROWS_AS(apply_step({StepRule::Alpha, {}, Term::tensor(X, Y)}),
                  std::invalid_argument);
}

TEST_CASE("step_to_map whiskers the generator along the path") {
  CHECK(step_to_map({StepRule::Lam, {}, Term::tensor(I, X)}) == MapExpr::lam(X));
  CHECK(step_to_map({StepRule::Rho, {Dir::Left}, Term::tensor(X, Y)}) ==
        MapExpr::tensor(MapExpr::rho(X), MapExpr::id(Y)));
  CHECK(step_to_map({StepRule::Lam,
                     {Dir::Right},
                     Term::tensor(Y, Term::tensor(I, X))}) ==
        MapExpr::tensor(MapExpr::id(Y), MapExpr::lam(X)));
}

TEST_CASE("step soundness: rewriting preserves the normal form") {
  for (const Term& t : enumerate_terms(3, 2))
    for (const RewriteStep& s : valid_steps(t)) {
      Term u = apply_step(s);
      CHECK(nf(u) == nf(t));
      MapExpr m = step_to_map(s);
      CHECK(!check_map(m).has_value());
      CHECK(m.dom() == t);
      CHECK(m.cod() == u);
    }
}

TEST_CASE("decompose on the spec cases") {
  SUBCASE("identity decomposes to the nil rewrite") {
    auto [steps, cert] = decompose(MapExpr::id(X));
    CHECK(steps.empty());
    Equation eq = check_proof(cert);
    CHECK(eq.lhs == MapExpr::id(X));
    CHECK(eq.rhs == MapExpr::id(X));
  }
  SUBCASE("tensor of generators, left first") {
    auto [steps, cert] = decompose(
        MapExpr::tensor(MapExpr::lam(X), MapExpr::rho(Y)));
    REQUIRE(steps.size() == 2);
    CHECK(to_string(steps[0]) == "lam@L");
    CHECK(to_string(steps[1]) == "rho@R");
    check_proof(cert);
  }
  SUBCASE("nested composites concatenate step lists") {
    const MapExpr f = MapExpr::comp(
        MapExpr::lam(X), MapExpr::tensor(MapExpr::id(I), MapExpr::lam(X)));
    auto [steps, cert] = decompose(f);
    REQUIRE(steps.size() == 2);
    CHECK(to_string(steps[0]) == "lam@R");
    CHECK(to_string(steps[1]) == "lam@");
    check_proof(cert);
  }
}

TEST_CASE("decompose round-trip over enumerated maps") {
  for (const MapExpr& f : enumerate_maps(5, 2)) {
    auto [steps, cert] = decompose(f);
    Term cur = f.dom();
    for (const RewriteStep& s : steps) {
      CHECK(s.on == cur);
      cur = apply_step(s);
    }
    CHECK(cur == f.cod());
    Equation eq = check_proof(cert);
    CHECK(eq.lhs == f);
    CHECK(eq.rhs == composite_of_steps(steps, f.dom()));
  }
}

TEST_CASE("search_maps") {
  SUBCASE("finds the single lam step") {
    SearchResult res = search_maps(Term::tensor(I, X), X, 8, 8);
    REQUIRE(res.verdict == SearchVerdict::Found);
    REQUIRE(res.steps.size() == 1);
    CHECK(to_string(res.steps[0]) == "lam@");
  }
  SUBCASE("exhausts on X => I (x) X") {
    SearchResult res = search_maps(X, Term::tensor(I, X), 8, 12);
    CHECK(res.verdict == SearchVerdict::Exhausted);
  }
  SUBCASE("reports nf mismatch immediately") {
    SearchResult res = search_maps(X, Y, 8, 8);
    CHECK(res.verdict == SearchVerdict::NfMismatch);
    CHECK(res.explored == 0);
  }
  SUBCASE("found paths convert to well-typed maps and are deterministic") {
    const Term a = Term::tensor(Term::tensor(X, I), Y);
    const Term b = emb(nf(a));
    SearchResult r1 = search_maps(a, b, a.size() + 2, 2 * a.size());
    SearchResult r2 = search_maps(a, b, a.size() + 2, 2 * a.size());
    REQUIRE(r1.verdict == SearchVerdict::Found);
    REQUIRE(r2.verdict == SearchVerdict::Found);
    REQUIRE(r1.steps.size() == r2.steps.size());
    for (std::size_t i = 0; i < r1.steps.size(); ++i)
      CHECK(to_string(r1.steps[i]) == to_string(r2.steps[i]));
    MapExpr m = composite_of_steps(r1.steps, a);
    CHECK(!check_map(m).has_value());
    CHECK(m.dom() == a);
    CHECK(m.cod() == b);
  }
  SUBCASE("search coverage via the canonical decomposition") {
    for (const Term& a : enumerate_terms(3, 2)) {
      auto steps = decompose_steps(nm(a));
      CHECK(static_cast<int>(steps.size()) <= 2 * a.size());
      Term cur = a;
      int max_size = a.size();
      for (const RewriteStep& s : steps) {
        cur = apply_step(s);
        max_size = std::max(max_size, cur.size());
      }
      CHECK(cur == emb(nf(a)));
      CHECK(max_size <= a.size() + 2);
      SearchResult res = search_maps(a, emb(nf(a)), a.size() + 2, 2 * a.size());
      CHECK(res.verdict == SearchVerdict::Found);
    }
  }
}
