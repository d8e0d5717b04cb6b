#include "skewcat/kernel.hpp"

#include <stdexcept>

#include "skewcat/errors.hpp"

namespace skewcat {

std::string to_string(const Equation& eq) {
  return to_string(eq.lhs) + " == " + to_string(eq.rhs) + "  :  " +
         to_string(eq.lhs.dom()) + " => " + to_string(eq.lhs.cod());
}

struct EqProof::Node {
  Rule rule;
  std::vector<MapExpr> maps;
  std::vector<Term> terms;
  std::vector<EqProof> kids;
};

namespace {
using Rule = EqProof::Rule;
}

#define SKEWCAT_MK(rule, ms, ts, ks)                                        \
  EqProof(std::make_shared<const Node>(Node{rule, ms, ts, ks}))

EqProof EqProof::refl(const MapExpr& f) { return SKEWCAT_MK(Rule::Refl, {f}, {}, {}); }
EqProof EqProof::sym(const EqProof& p) { return SKEWCAT_MK(Rule::Sym, {}, {}, {p}); }
EqProof EqProof::trans(const EqProof& p, const EqProof& q) {
  return SKEWCAT_MK(Rule::Trans, {}, {}, (std::vector<EqProof>{p, q}));
}
EqProof EqProof::comp_cong(const EqProof& p, const EqProof& q) {
  return SKEWCAT_MK(Rule::CompCong, {}, {}, (std::vector<EqProof>{p, q}));
}
EqProof EqProof::tensor_cong(const EqProof& p, const EqProof& q) {
  return SKEWCAT_MK(Rule::TensorCong, {}, {}, (std::vector<EqProof>{p, q}));
}
EqProof EqProof::id_l(const MapExpr& f) { return SKEWCAT_MK(Rule::IdL, {f}, {}, {}); }
EqProof EqProof::id_r(const MapExpr& f) { return SKEWCAT_MK(Rule::IdR, {f}, {}, {}); }
EqProof EqProof::comp_assoc(const MapExpr& f, const MapExpr& g, const MapExpr& h) {
  return SKEWCAT_MK(Rule::CompAssoc, (std::vector<MapExpr>{f, g, h}), {}, {});
}
EqProof EqProof::tensor_id(const Term& a, const Term& b) {
  return SKEWCAT_MK(Rule::TensorId, {}, (std::vector<Term>{a, b}), {});
}
EqProof EqProof::tensor_comp(const MapExpr& h, const MapExpr& f,
                             const MapExpr& k, const MapExpr& g) {
  return SKEWCAT_MK(Rule::TensorComp, (std::vector<MapExpr>{h, f, k, g}), {}, {});
}
EqProof EqProof::nat_lam(const MapExpr& f) { return SKEWCAT_MK(Rule::NatLam, {f}, {}, {}); }
EqProof EqProof::nat_rho(const MapExpr& f) { return SKEWCAT_MK(Rule::NatRho, {f}, {}, {}); }
EqProof EqProof::nat_alpha(const MapExpr& f, const MapExpr& g, const MapExpr& h) {
  return SKEWCAT_MK(Rule::NatAlpha, (std::vector<MapExpr>{f, g, h}), {}, {});
}
EqProof EqProof::law_a() { return SKEWCAT_MK(Rule::LawA, {}, {}, {}); }
EqProof EqProof::law_b(const Term& a, const Term& b) {
  return SKEWCAT_MK(Rule::LawB, {}, (std::vector<Term>{a, b}), {});
}
EqProof EqProof::law_c(const Term& a, const Term& b) {
  return SKEWCAT_MK(Rule::LawC, {}, (std::vector<Term>{a, b}), {});
}
EqProof EqProof::law_d(const Term& a, const Term& b) {
  return SKEWCAT_MK(Rule::LawD, {}, (std::vector<Term>{a, b}), {});
}
EqProof EqProof::law_e(const Term& a, const Term& b, const Term& c, const Term& d) {
  return SKEWCAT_MK(Rule::LawE, {}, (std::vector<Term>{a, b, c, d}), {});
}

#undef SKEWCAT_MK

EqProof::Rule EqProof::rule() const { return node_->rule; }
const std::vector<MapExpr>& EqProof::maps() const { return node_->maps; }
const std::vector<Term>& EqProof::terms() const { return node_->terms; }
const std::vector<EqProof>& EqProof::children() const { return node_->kids; }

std::size_t EqProof::node_count() const {
  std::size_t n = 1;
  for (const EqProof& k : children()) n += k.node_count();
  return n;
}

EqProof trans_chain(const std::vector<EqProof>& steps) {
  if (steps.empty()) throw std::invalid_argument("trans_chain: empty chain");
  EqProof acc = steps.back();
  for (auto it = steps.rbegin() + 1; it != steps.rend(); ++it)
    acc = EqProof::trans(*it, acc);
  return acc;
}

namespace {

void require_composable(const MapExpr& outer, const MapExpr& inner,
                        const char* where) {
  if (!(outer.dom() == inner.cod()))
    throw KernelError(std::string(where) + ": maps do not compose: dom " +
                      to_string(outer.dom()) + " vs cod " + to_string(inner.cod()));
}

void require_typed(const MapExpr& f, const char* where) {
  if (auto err = check_map(f))
    throw KernelError(std::string(where) + ": ill-typed side: " + *err);
}

MapExpr mid(const Term& a) { return MapExpr::id(a); }
MapExpr munit_id() { return MapExpr::id(Term::unit()); }

}  // namespace

Equation check_proof(const EqProof& p) {
  using K = MapExpr;
  const auto& ms = p.maps();
  const auto& ts = p.terms();
  const auto& ks = p.children();

  Equation out = [&]() -> Equation {
    switch (p.rule()) {
      case Rule::Refl: {
        require_typed(ms[0], "refl");
        return {ms[0], ms[0]};
      }
      case Rule::Sym: {
        Equation e = check_proof(ks[0]);
        return {e.rhs, e.lhs};
      }
      case Rule::Trans: {
        Equation e1 = check_proof(ks[0]);
        Equation e2 = check_proof(ks[1]);
        if (!(e1.rhs == e2.lhs))
          throw KernelError("trans: middle maps differ: " + to_string(e1.rhs) +
                            " vs " + to_string(e2.lhs));
        return {e1.lhs, e2.rhs};
      }
      case Rule::CompCong: {
        Equation e1 = check_proof(ks[0]);
        Equation e2 = check_proof(ks[1]);
        require_composable(e1.lhs, e2.lhs, "comp-cong");
        require_composable(e1.rhs, e2.rhs, "comp-cong");
        return {K::comp(e1.lhs, e2.lhs), K::comp(e1.rhs, e2.rhs)};
      }
      case Rule::TensorCong: {
        Equation e1 = check_proof(ks[0]);
        Equation e2 = check_proof(ks[1]);
        return {K::tensor(e1.lhs, e2.lhs), K::tensor(e1.rhs, e2.rhs)};
      }
      case Rule::IdL: {
        require_typed(ms[0], "id-l");
        return {K::comp(mid(ms[0].cod()), ms[0]), ms[0]};
      }
      case Rule::IdR: {
        require_typed(ms[0], "id-r");
        return {ms[0], K::comp(ms[0], mid(ms[0].dom()))};
      }
      case Rule::CompAssoc: {
        const MapExpr &f = ms[0], &g = ms[1], &h = ms[2];
        require_typed(f, "comp-assoc");
        require_typed(g, "comp-assoc");
        require_typed(h, "comp-assoc");
        require_composable(f, g, "comp-assoc");
        require_composable(g, h, "comp-assoc");
        return {K::comp(K::comp(f, g), h), K::comp(f, K::comp(g, h))};
      }
      case Rule::TensorId: {
        return {K::tensor(mid(ts[0]), mid(ts[1])), mid(Term::tensor(ts[0], ts[1]))};
      }
      case Rule::TensorComp: {
        const MapExpr &h = ms[0], &f = ms[1], &k = ms[2], &g = ms[3];
        for (const MapExpr& m : ms) require_typed(m, "ten-comp");
        require_composable(h, f, "ten-comp");
        require_composable(k, g, "ten-comp");
        return {K::tensor(K::comp(h, f), K::comp(k, g)),
                K::comp(K::tensor(h, k), K::tensor(f, g))};
      }
      case Rule::NatLam: {
        const MapExpr& f = ms[0];
        require_typed(f, "nat-lam");
        return {K::comp(K::lam(f.cod()), K::tensor(munit_id(), f)),
                K::comp(f, K::lam(f.dom()))};
      }
      case Rule::NatRho: {
        const MapExpr& f = ms[0];
        require_typed(f, "nat-rho");
        return {K::comp(K::rho(f.cod()), f),
                K::comp(K::tensor(f, munit_id()), K::rho(f.dom()))};
      }
      case Rule::NatAlpha: {
        const MapExpr &f = ms[0], &g = ms[1], &h = ms[2];
        require_typed(f, "nat-alpha");
        require_typed(g, "nat-alpha");
        require_typed(h, "nat-alpha");
        return {K::comp(K::alpha(f.cod(), g.cod(), h.cod()),
                        K::tensor(K::tensor(f, g), h)),
                K::comp(K::tensor(f, K::tensor(g, h)),
                        K::alpha(f.dom(), g.dom(), h.dom()))};
      }
      case Rule::LawA: {
        return {K::comp(K::lam(Term::unit()), K::rho(Term::unit())),
                munit_id()};
      }
      case Rule::LawB: {
        const Term &a = ts[0], &b = ts[1];
        return {mid(Term::tensor(a, b)),
                K::comp(K::tensor(mid(a), K::lam(b)),
                        K::comp(K::alpha(a, Term::unit(), b),
                                K::tensor(K::rho(a), mid(b))))};
      }
      case Rule::LawC: {
        const Term &a = ts[0], &b = ts[1];
        return {K::comp(K::lam(Term::tensor(a, b)), K::alpha(Term::unit(), a, b)),
                K::tensor(K::lam(a), mid(b))};
      }
      case Rule::LawD: {
        const Term &a = ts[0], &b = ts[1];
        return {K::comp(K::alpha(a, b, Term::unit()), K::rho(Term::tensor(a, b))),
                K::tensor(mid(a), K::rho(b))};
      }
      case Rule::LawE: {
        const Term &a = ts[0], &b = ts[1], &c = ts[2], &d = ts[3];
        return {K::comp(K::alpha(a, b, Term::tensor(c, d)),
                        K::alpha(Term::tensor(a, b), c, d)),
                K::comp(K::tensor(mid(a), K::alpha(b, c, d)),
                        K::comp(K::alpha(a, Term::tensor(b, c), d),
                                K::tensor(K::alpha(a, b, c), mid(d))))};
      }
    }
    throw std::logic_error("unreachable");
  }();

  if (!(out.lhs.dom() == out.rhs.dom()) || !(out.lhs.cod() == out.rhs.cod()))
    throw KernelError("conclusion is not parallel: " + to_string(out.lhs) +
                      " vs " + to_string(out.rhs));
  return out;
}

namespace {

const char* rule_name(Rule r) {
  switch (r) {
    case Rule::Refl: return "refl";
    case Rule::Sym: return "sym";
    case Rule::Trans: return "trans";
    case Rule::CompCong: return "comp-cong";
    case Rule::TensorCong: return "ten-cong";
    case Rule::IdL: return "id-l";
    case Rule::IdR: return "id-r";
    case Rule::CompAssoc: return "comp-assoc";
    case Rule::TensorId: return "ten-id";
    case Rule::TensorComp: return "ten-comp";
    case Rule::NatLam: return "nat-lam";
    case Rule::NatRho: return "nat-rho";
    case Rule::NatAlpha: return "nat-alpha";
    case Rule::LawA: return "law-a";
    case Rule::LawB: return "law-b";
    case Rule::LawC: return "law-c";
    case Rule::LawD: return "law-d";
    case Rule::LawE: return "law-e";
  }
  return "?";
}

void term_sexpr(const Term& t, std::string& out) {
  switch (t.kind()) {
    case Term::Kind::Var: out += t.variable().name(); break;
    case Term::Kind::Unit: out += "I"; break;
    case Term::Kind::Tensor:
      out += "(* ";
      term_sexpr(t.left(), out);
      out += " ";
      term_sexpr(t.right(), out);
      out += ")";
      break;
  }
}

void map_sexpr(const MapExpr& f, std::string& out) {
  auto unary = [&](const char* name) {
    out += "(";
    out += name;
    out += " ";
    term_sexpr(f.index(), out);
    out += ")";
  };
  switch (f.kind()) {
    case MapExpr::Kind::Id: unary("id"); break;
    case MapExpr::Kind::Lam: unary("lam"); break;
    case MapExpr::Kind::Rho: unary("rho"); break;
    case MapExpr::Kind::Alpha:
      out += "(alpha ";
      term_sexpr(f.index(0), out);
      out += " ";
      term_sexpr(f.index(1), out);
      out += " ";
      term_sexpr(f.index(2), out);
      out += ")";
      break;
    case MapExpr::Kind::Comp:
    case MapExpr::Kind::Tensor:
      out += f.is_comp() ? "(comp " : "(ten ";
      map_sexpr(f.first(), out);
      out += " ";
      map_sexpr(f.second(), out);
      out += ")";
      break;
  }
}

void proof_sexpr(const EqProof& p, std::string& out) {
  out += "(";
  out += rule_name(p.rule());
  for (const MapExpr& m : p.maps()) {
    out += " ";
    map_sexpr(m, out);
  }
  for (const Term& t : p.terms()) {
    out += " ";
    term_sexpr(t, out);
  }
  for (const EqProof& k : p.children()) {
    out += " ";
    proof_sexpr(k, out);
  }
  out += ")";
}

}  // namespace

std::string to_sexpr(const EqProof& p) {
  std::string out;
  proof_sexpr(p, out);
  return out;
}

}  // namespace skewcat
