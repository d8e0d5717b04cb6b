#include "skewcat/demo.hpp"

#include <vector>

#include "skewcat/coherence.hpp"
#include "skewcat/models.hpp"
#include "skewcat/rewriting.hpp"

namespace skewcat {

namespace {

struct Reporter {
  std::ostream& out;
  bool ok = true;

  void verdict(bool pass, const std::string& line) {
    out << (pass ? "  ok   " : "  FAIL ") << line << "\n";
    ok = ok && pass;
  }
};

void separation_example(Reporter& rep, const std::string& label,
                        const MapExpr& f, const MapExpr& g) {
  auto vals = default_separation_valuations(f, g);
  auto w = separate(f, g, vals);
  if (w)
    rep.verdict(true, label + ": SEPARATED at valuation " +
                          to_string(w->valuation) + " element " +
                          std::to_string(w->element));
  else
    rep.verdict(false, label + ": expected a separating valuation");
}

void no_map_example(Reporter& rep, const Term& a, const Term& b) {
  const std::string label = to_string(a) + " => " + to_string(b);
  bool nf_equal = nf(a) == nf(b);
  bool nfrev_agrees = (nfrev(a) == nfrev(b)) == nf_equal;
  rep.verdict(nf_equal, label + ": NF-EQUAL " + to_string(nf(a)) +
                            (nfrev_agrees ? " (nfrev agrees)"
                                          : " (nfrev DISAGREES)"));
  const int size_bound = a.size() + 6;
  const int step_bound = 12;
  SearchResult res = search_maps(a, b, size_bound, step_bound);
  rep.verdict(res.verdict == SearchVerdict::Exhausted,
              label + ": SEARCH EXHAUSTED (maxTermSize=" +
                  std::to_string(size_bound) + ", maxSteps=" +
                  std::to_string(step_bound) + ", explored " +
                  std::to_string(res.explored) + " terms)");
}

void coherence_example(Reporter& rep, const Term& a) {
  const MapExpr canonical = nm(a);
  bool pass = false;
  std::string detail;
  try {
    Equation eq = check_proof(coherence_proof(canonical));
    pass = eq.lhs == canonical && eq.rhs == canonical;
    detail = pass ? "KERNEL OK" : "unexpected conclusion " + to_string(eq);
  } catch (const std::exception& e) {
    detail = std::string("kernel rejected: ") + e.what();
  }
  rep.verdict(pass, "nm at " + to_string(a) + ": " + detail);
}

}  // namespace

bool run_demo(std::ostream& out) {
  Reporter rep{out};
  const Term I = Term::unit();
  const Term X = Term::var("X");
  const Term Y = Term::var("Y");
  const Term Z = Term::var("Z");

  out << "-- parallel maps separated in the pointed-set model\n";
  // id vs rho . lam at I * I
  separation_example(
      rep, "id_(I * I) vs rho_I . lam_I", MapExpr::id(Term::tensor(I, I)),
      MapExpr::comp(MapExpr::rho(I), MapExpr::lam(I)));
  // id vs (rho * id) . (id * lam) . alpha at (X * I) * Y
  {
    const Term t = Term::tensor(Term::tensor(X, I), Y);
    const MapExpr g = MapExpr::comp(
        MapExpr::tensor(MapExpr::rho(X), MapExpr::id(Y)),
        MapExpr::comp(MapExpr::tensor(MapExpr::id(X), MapExpr::lam(Y)),
                      MapExpr::alpha(X, I, Y)));
    separation_example(rep, "id vs (rho_X * id_Y) . (id_X * lam_Y) . alpha at " +
                                to_string(t),
                       MapExpr::id(t), g);
  }
  // lam vs id * lam at I * (I * X)
  separation_example(rep, "lam vs (id_I * lam_X) at (I * (I * X))",
                     MapExpr::lam(Term::tensor(I, X)),
                     MapExpr::tensor(MapExpr::id(I), MapExpr::lam(X)));

  out << "-- equal normal forms without any map between the terms\n";
  no_map_example(rep, X, Term::tensor(I, X));
  no_map_example(rep, Term::tensor(X, Term::tensor(Term::tensor(Y, Z), I)),
                 Term::tensor(Term::tensor(X, Y), Term::tensor(Z, I)));

  out << "-- kernel-checked coherence of the canonical normalizing maps\n";
  for (const Term& t : std::vector<Term>{
           Term::tensor(I, I), Term::tensor(Term::tensor(X, I), Y),
           Term::tensor(I, Term::tensor(I, X)), X, Term::tensor(I, X),
           Term::tensor(X, Term::tensor(Term::tensor(Y, Z), I)),
           Term::tensor(Term::tensor(X, Y), Term::tensor(Z, I))})
    coherence_example(rep, t);

  out << (rep.ok ? "demo: all verdicts as expected\n"
                 : "demo: VERDICT FAILURES\n");
  return rep.ok;
}

}  // namespace skewcat
