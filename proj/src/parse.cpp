#include "skewcat/parse.hpp"

#include <cctype>
#include <charconv>
#include <functional>

namespace skewcat {

namespace {

// Shared cursor for the infix term/map grammars.
struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }
  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    if (pos >= text.size()) throw ParseError("unexpected end of input", pos);
    return text[pos];
  }
  bool try_consume(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c)
      throw ParseError(std::string("expected '") + c + "'", pos);
    ++pos;
  }
  std::string ident() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) ||
            text[pos] == '\''))
      ++pos;
    if (pos == start) throw ParseError("expected a name", pos);
    return std::string(text.substr(start, pos - start));
  }
  void expect_end() {
    skip_ws();
    if (pos < text.size()) throw ParseError("trailing input", pos);
  }
};

Term parse_term_expr(Cursor& c);

Term parse_term_atom(Cursor& c) {
  if (c.try_consume('(')) {
    Term t = parse_term_expr(c);
    // "*" chains group to the left
    while (c.try_consume('*')) t = Term::tensor(t, parse_term_expr(c));
    c.expect(')');
    return t;
  }
  std::string name = c.ident();
  if (name == "I") return Term::unit();
  return Term::var(name);
}

Term parse_term_expr(Cursor& c) { return parse_term_atom(c); }

MapExpr parse_map_chain(Cursor& c);

MapExpr parse_map_item(Cursor& c) {
  if (c.try_consume('(')) {
    MapExpr m = parse_map_chain(c);
    while (c.try_consume('*')) m = MapExpr::tensor(m, parse_map_chain(c));
    c.expect(')');
    return m;
  }
  c.skip_ws();
  const std::size_t at = c.pos;
  std::string kw = c.ident();
  c.expect('_');
  if (kw == "id") return MapExpr::id(parse_term_atom(c));
  if (kw == "lam") return MapExpr::lam(parse_term_atom(c));
  if (kw == "rho") return MapExpr::rho(parse_term_atom(c));
  if (kw == "alpha") {
    c.expect('(');
    Term a = parse_term_expr(c);
    c.expect(',');
    Term b = parse_term_expr(c);
    c.expect(',');
    Term d = parse_term_expr(c);
    c.expect(')');
    return MapExpr::alpha(a, b, d);
  }
  throw ParseError("unknown map constructor '" + kw + "'", at);
}

MapExpr parse_map_chain(Cursor& c) {
  std::vector<MapExpr> items{parse_map_item(c)};
  while (c.try_consume('.')) items.push_back(parse_map_item(c));
  MapExpr acc = items.back();
  for (auto it = items.rbegin() + 1; it != items.rend(); ++it)
    acc = MapExpr::comp(*it, acc);
  return acc;
}

// --- s-expression reader for proofs ---

struct Sexpr {
  // atom when children empty and !is_list
  std::string atom;
  std::vector<Sexpr> children;
  bool is_list = false;
  std::size_t at = 0;
};

Sexpr parse_sexpr(Cursor& c) {
  c.skip_ws();
  Sexpr out;
  out.at = c.pos;
  if (c.try_consume('(')) {
    out.is_list = true;
    while (!c.try_consume(')')) {
      if (c.at_end()) throw ParseError("unterminated s-expression", c.pos);
      out.children.push_back(parse_sexpr(c));
    }
    return out;
  }
  std::size_t start = c.pos;
  while (c.pos < c.text.size() &&
         !std::isspace(static_cast<unsigned char>(c.text[c.pos])) &&
         c.text[c.pos] != '(' && c.text[c.pos] != ')')
    ++c.pos;
  if (c.pos == start) throw ParseError("expected an s-expression", c.pos);
  out.atom = std::string(c.text.substr(start, c.pos - start));
  return out;
}

Term term_from_sexpr(const Sexpr& s) {
  if (!s.is_list) {
    if (s.atom == "I") return Term::unit();
    return Term::var(s.atom);
  }
  if (s.children.size() == 3 && !s.children[0].is_list &&
      s.children[0].atom == "*")
    return Term::tensor(term_from_sexpr(s.children[1]),
                        term_from_sexpr(s.children[2]));
  throw ParseError("malformed term s-expression", s.at);
}

MapExpr map_from_sexpr(const Sexpr& s) {
  if (!s.is_list || s.children.empty() || s.children[0].is_list)
    throw ParseError("malformed map s-expression", s.at);
  const std::string& head = s.children[0].atom;
  auto arity = [&](std::size_t n) {
    if (s.children.size() != n + 1)
      throw ParseError("wrong arity for '" + head + "'", s.at);
  };
  if (head == "id") { arity(1); return MapExpr::id(term_from_sexpr(s.children[1])); }
  if (head == "lam") { arity(1); return MapExpr::lam(term_from_sexpr(s.children[1])); }
  if (head == "rho") { arity(1); return MapExpr::rho(term_from_sexpr(s.children[1])); }
  if (head == "alpha") {
    arity(3);
    return MapExpr::alpha(term_from_sexpr(s.children[1]),
                          term_from_sexpr(s.children[2]),
                          term_from_sexpr(s.children[3]));
  }
  if (head == "comp") {
    arity(2);
    return MapExpr::comp(map_from_sexpr(s.children[1]),
                         map_from_sexpr(s.children[2]));
  }
  if (head == "ten") {
    arity(2);
    return MapExpr::tensor(map_from_sexpr(s.children[1]),
                           map_from_sexpr(s.children[2]));
  }
  throw ParseError("unknown map constructor '" + head + "'", s.at);
}

EqProof proof_from_sexpr(const Sexpr& s) {
  if (!s.is_list || s.children.empty() || s.children[0].is_list)
    throw ParseError("malformed proof s-expression", s.at);
  const std::string& head = s.children[0].atom;
  auto arity = [&](std::size_t n) {
    if (s.children.size() != n + 1)
      throw ParseError("wrong arity for '" + head + "'", s.at);
  };
  auto m = [&](std::size_t i) { return map_from_sexpr(s.children[i]); };
  auto t = [&](std::size_t i) { return term_from_sexpr(s.children[i]); };
  auto p = [&](std::size_t i) { return proof_from_sexpr(s.children[i]); };

  if (head == "refl") { arity(1); return EqProof::refl(m(1)); }
  if (head == "sym") { arity(1); return EqProof::sym(p(1)); }
  if (head == "trans") { arity(2); return EqProof::trans(p(1), p(2)); }
  if (head == "comp-cong") { arity(2); return EqProof::comp_cong(p(1), p(2)); }
  if (head == "ten-cong") { arity(2); return EqProof::tensor_cong(p(1), p(2)); }
  if (head == "id-l") { arity(1); return EqProof::id_l(m(1)); }
  if (head == "id-r") { arity(1); return EqProof::id_r(m(1)); }
  if (head == "comp-assoc") { arity(3); return EqProof::comp_assoc(m(1), m(2), m(3)); }
  if (head == "ten-id") { arity(2); return EqProof::tensor_id(t(1), t(2)); }
  if (head == "ten-comp") { arity(4); return EqProof::tensor_comp(m(1), m(2), m(3), m(4)); }
  if (head == "nat-lam") { arity(1); return EqProof::nat_lam(m(1)); }
  if (head == "nat-rho") { arity(1); return EqProof::nat_rho(m(1)); }
  if (head == "nat-alpha") { arity(3); return EqProof::nat_alpha(m(1), m(2), m(3)); }
  if (head == "law-a") { arity(0); return EqProof::law_a(); }
  if (head == "law-b") { arity(2); return EqProof::law_b(t(1), t(2)); }
  if (head == "law-c") { arity(2); return EqProof::law_c(t(1), t(2)); }
  if (head == "law-d") { arity(2); return EqProof::law_d(t(1), t(2)); }
  if (head == "law-e") { arity(4); return EqProof::law_e(t(1), t(2), t(3), t(4)); }
  throw ParseError("unknown proof rule '" + head + "'", s.at);
}

}  // namespace

Term parse_term(std::string_view text) {
  Cursor c{text};
  Term t = parse_term_atom(c);
  c.expect_end();
  return t;
}

MapExpr parse_map(std::string_view text) {
  Cursor c{text};
  MapExpr m = parse_map_chain(c);
  c.expect_end();
  return m;
}

EqProof parse_proof(std::string_view text) {
  Cursor c{text};
  Sexpr s = parse_sexpr(c);
  c.expect_end();
  return proof_from_sexpr(s);
}

ValuationFile parse_valuation_file(std::string_view text) {
  ValuationFile out;
  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    std::size_t eol = text.find('\n', line_start);
    std::string_view line = text.substr(
        line_start, eol == std::string_view::npos ? std::string_view::npos
                                                  : eol - line_start);
    const std::size_t base = line_start;
    line_start = eol == std::string_view::npos ? text.size() + 1 : eol + 1;

    Cursor c{line};
    if (c.at_end() || c.peek() == '#') continue;
    std::string name = c.ident();
    c.expect('=');
    std::string kind = c.ident();
    std::string num = c.ident();
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), value);
    if (ec != std::errc{} || ptr != num.data() + num.size())
      throw ParseError("expected a number, got '" + num + "'", base + c.pos);
    c.expect_end();
    if (kind == "pointed") {
      if (value == 0) throw ParseError("pointed set must be nonempty", base);
      out.pointed.emplace(Variable(name), FinPointed{static_cast<int>(value), 0});
    } else if (kind == "nat") {
      out.nat.emplace(Variable(name), value);
    } else {
      throw ParseError("expected 'pointed' or 'nat', got '" + kind + "'", base);
    }
  }
  return out;
}

}  // namespace skewcat
