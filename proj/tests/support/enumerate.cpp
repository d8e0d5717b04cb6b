#include "enumerate.hpp"

#include <map>
#include <stdexcept>

namespace skewcat::testing {

std::vector<Variable> alphabet(int num_vars) {
  static const char* names[] = {"X", "Y", "Z", "W"};
  if (num_vars < 0 || num_vars > 4)
    throw std::invalid_argument("alphabet supports up to 4 variables");
  std::vector<Variable> out;
  for (int i = 0; i < num_vars; ++i) out.emplace_back(names[i]);
  return out;
}

std::vector<Term> enumerate_terms(int max_depth, int num_vars) {
  std::vector<Term> leaves{Term::unit()};
  for (const Variable& v : alphabet(num_vars)) leaves.push_back(Term::var(v));

  std::vector<Term> current = leaves;  // depth <= d
  for (int d = 2; d <= max_depth; ++d) {
    std::vector<Term> next = leaves;
    next.reserve(leaves.size() + current.size() * current.size());
    for (const Term& l : current)
      for (const Term& r : current) next.push_back(Term::tensor(l, r));
    current = std::move(next);
  }
  return current;
}

std::vector<NormalForm> enumerate_normal_forms(int max_len, int num_vars) {
  const std::vector<Variable> vars = alphabet(num_vars);
  std::vector<NormalForm> out{NormalForm::nil()};
  std::size_t level_begin = 0;
  for (int len = 1; len <= max_len; ++len) {
    const std::size_t level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i)
      for (const Variable& v : vars) out.push_back(NormalForm::cons(v, out[i]));
    level_begin = level_end;
  }
  return out;
}

namespace {

/// Terms grouped by node count (sizes are odd: 1, 3, 5, ...).
std::vector<std::vector<Term>> terms_by_size(int max_size, int num_vars) {
  std::vector<std::vector<Term>> by_size(max_size + 1);
  if (max_size >= 1) {
    by_size[1].push_back(Term::unit());
    for (const Variable& v : alphabet(num_vars))
      by_size[1].push_back(Term::var(v));
  }
  for (int s = 3; s <= max_size; ++s)
    for (int sl = 1; sl < s - 1; ++sl) {
      int sr = s - 1 - sl;
      for (const Term& l : by_size[sl])
        for (const Term& r : by_size[sr]) by_size[s].push_back(Term::tensor(l, r));
    }
  return by_size;
}

}  // namespace

std::vector<MapExpr> enumerate_maps(int max_size, int num_vars) {
  const auto terms = terms_by_size(max_size - 1, num_vars);
  std::vector<std::vector<MapExpr>> by_size(max_size + 1);

  for (int s = 2; s <= max_size; ++s) {
    // generators: the index terms account for s - 1 nodes
    for (const Term& a : terms[s - 1]) {
      by_size[s].push_back(MapExpr::id(a));
      by_size[s].push_back(MapExpr::lam(a));
      by_size[s].push_back(MapExpr::rho(a));
    }
    for (int sa = 1; sa <= s - 3; ++sa)
      for (int sb = 1; sb <= s - 2 - sa; ++sb) {
        int sc = s - 1 - sa - sb;
        if (sc < 1 || sc >= static_cast<int>(terms.size())) continue;
        for (const Term& a : terms[sa])
          for (const Term& b : terms[sb])
            for (const Term& c : terms[sc])
              by_size[s].push_back(MapExpr::alpha(a, b, c));
      }
    // composites and tensors of smaller maps
    for (int sf = 2; sf <= s - 3; ++sf) {
      int sg = s - 1 - sf;
      for (const MapExpr& f : by_size[sf])
        for (const MapExpr& g : by_size[sg]) {
          if (f.dom() == g.cod()) by_size[s].push_back(MapExpr::comp(f, g));
          by_size[s].push_back(MapExpr::tensor(f, g));
        }
    }
  }

  std::vector<MapExpr> out;
  for (auto& bucket : by_size)
    out.insert(out.end(), bucket.begin(), bucket.end());
  return out;
}

std::vector<PointedValuation> enumerate_valuations(
    const std::vector<Variable>& vars, int max_size, bool point_sweep) {
  std::vector<FinPointed> objects;
  for (int s = 1; s <= max_size; ++s)
    for (int p = 0; p < (point_sweep ? s : 1); ++p) objects.push_back({s, p});

  std::vector<PointedValuation> out{{}};
  for (const Variable& v : vars) {
    std::vector<PointedValuation> next;
    next.reserve(out.size() * objects.size());
    for (const PointedValuation& val : out)
      for (const FinPointed& obj : objects) {
        PointedValuation extended = val;
        extended.emplace(v, obj);
        next.push_back(std::move(extended));
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace skewcat::testing
