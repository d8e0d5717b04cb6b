#include "skewcat/models.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace skewcat {

FinPointed eval_term_pointed(const Term& a, const PointedValuation& v) {
  switch (a.kind()) {
    case Term::Kind::Var: {
      auto it = v.find(a.variable());
      if (it == v.end())
        throw std::out_of_range("unbound variable " + a.variable().name());
      return it->second;
    }
    case Term::Kind::Unit:
      return {1, 0};
    case Term::Kind::Tensor: {
      FinPointed l = eval_term_pointed(a.left(), v);
      FinPointed r = eval_term_pointed(a.right(), v);
      return {l.size + r.size, l.point};
    }
  }
  throw std::logic_error("unreachable");
}

PointedFn eval_map_pointed(const MapExpr& f, const PointedValuation& v) {
  require_well_typed(f);
  const FinPointed from = eval_term_pointed(f.dom(), v);
  const FinPointed to = eval_term_pointed(f.cod(), v);
  PointedFn out{from, to, {}};
  out.table.resize(static_cast<std::size_t>(from.size));

  switch (f.kind()) {
    case MapExpr::Kind::Id:
    case MapExpr::Kind::Alpha:
      // alpha only reassociates blocks: identity on indices
      std::iota(out.table.begin(), out.table.end(), 0);
      break;
    case MapExpr::Kind::Comp: {
      PointedFn inner = eval_map_pointed(f.second(), v);
      PointedFn outer = eval_map_pointed(f.first(), v);
      for (int x = 0; x < from.size; ++x)
        out.table[x] = outer.table[inner.table[x]];
      break;
    }
    case MapExpr::Kind::Tensor: {
      PointedFn l = eval_map_pointed(f.first(), v);
      PointedFn r = eval_map_pointed(f.second(), v);
      for (int x = 0; x < l.from.size; ++x) out.table[x] = l.table[x];
      for (int x = 0; x < r.from.size; ++x)
        out.table[l.from.size + x] = l.to.size + r.table[x];
      break;
    }
    case MapExpr::Kind::Lam: {
      // inl * goes to the point, inr x to x
      FinPointed arg = eval_term_pointed(f.index(), v);
      out.table[0] = arg.point;
      for (int x = 0; x < arg.size; ++x) out.table[1 + x] = x;
      break;
    }
    case MapExpr::Kind::Rho: {
      for (int x = 0; x < from.size; ++x) out.table[x] = x;
      break;
    }
  }
  return out;
}

std::optional<SeparationWitness> separate(
    const MapExpr& f, const MapExpr& g,
    std::span<const PointedValuation> valuations) {
  require_well_typed(f);
  require_well_typed(g);
  if (!(f.dom() == g.dom()) || !(f.cod() == g.cod()))
    throw std::invalid_argument("separate: maps are not parallel");
  for (const PointedValuation& v : valuations) {
    PointedFn tf = eval_map_pointed(f, v);
    PointedFn tg = eval_map_pointed(g, v);
    for (std::size_t x = 0; x < tf.table.size(); ++x)
      if (tf.table[x] != tg.table[x]) return SeparationWitness{v, static_cast<int>(x)};
  }
  return std::nullopt;
}

std::vector<PointedValuation> default_separation_valuations(const MapExpr& f,
                                                            const MapExpr& g) {
  std::vector<Variable> vars = map_variables(f);
  for (const Variable& v : map_variables(g))
    if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
  std::sort(vars.begin(), vars.end());

  std::vector<PointedValuation> out;
  const std::size_t n = vars.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    PointedValuation val;
    for (std::size_t i = 0; i < n; ++i)
      val.emplace(vars[i], FinPointed{(mask >> i) & 1 ? 2 : 1, 0});
    out.push_back(std::move(val));
  }
  return out;
}

std::uint64_t eval_term_nat(const Term& a, const NatModelParams& p) {
  switch (a.kind()) {
    case Term::Kind::Var: {
      auto it = p.valuation.find(a.variable());
      if (it == p.valuation.end())
        throw std::out_of_range("unbound variable " + a.variable().name());
      return it->second;
    }
    case Term::Kind::Unit:
      return p.unit;
    case Term::Kind::Tensor: {
      std::uint64_t l = eval_term_nat(a.left(), p);
      std::uint64_t r = eval_term_nat(a.right(), p);
      return (l > p.unit ? l - p.unit : 0) + r;
    }
  }
  throw std::logic_error("unreachable");
}

std::optional<NatModelParams> check_nat_hom(const Term& a, const Term& b,
                                            std::span<const NatModelParams> ps) {
  for (const NatModelParams& p : ps)
    if (eval_term_nat(a, p) > eval_term_nat(b, p)) return p;
  return std::nullopt;
}

bool nat_map_valid(const MapExpr& f, const NatModelParams& p) {
  switch (f.kind()) {
    case MapExpr::Kind::Id:
      return true;
    case MapExpr::Kind::Comp:
    case MapExpr::Kind::Tensor:
      return nat_map_valid(f.first(), p) && nat_map_valid(f.second(), p);
    case MapExpr::Kind::Lam:
      return eval_term_nat(f.dom(), p) == eval_term_nat(f.cod(), p);
    case MapExpr::Kind::Rho:
    case MapExpr::Kind::Alpha:
      return eval_term_nat(f.dom(), p) <= eval_term_nat(f.cod(), p);
  }
  throw std::logic_error("unreachable");
}

std::string to_string(const PointedValuation& v) {
  std::string out = "{";
  bool first = true;
  for (const auto& [var, fp] : v) {
    if (!first) out += ", ";
    first = false;
    out += var.name() + "=pointed " + std::to_string(fp.size);
    if (fp.point != 0) out += "@" + std::to_string(fp.point);
  }
  return out + "}";
}

std::string to_string(const PointedFn& f) {
  std::string out = "[";
  for (std::size_t i = 0; i < f.table.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(f.table[i]);
  }
  return out + "]";
}

}  // namespace skewcat
