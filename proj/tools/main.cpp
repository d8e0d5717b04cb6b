#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "skewcat/coherence.hpp"
#include "skewcat/demo.hpp"
#include "skewcat/models.hpp"
#include "skewcat/parse.hpp"
#include "skewcat/rewriting.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerdict = 1;   // search exhausted, decision not applicable, ...
constexpr int kExitBadInput = 2;  // parse or typing errors

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

skewcat::PointedValuation pointed_valuation_for(
    const std::string& valuation_path, const skewcat::MapExpr& f) {
  if (!valuation_path.empty())
    return skewcat::parse_valuation_file(read_file(valuation_path)).pointed;
  skewcat::PointedValuation v;
  for (const skewcat::Variable& var : skewcat::map_variables(f))
    v.emplace(var, skewcat::FinPointed{2, 0});
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace skewcat;

  CLI::App app{"free skew-monoidal category toolkit"};
  app.require_subcommand(1);

  std::string term_text, term2_text, map_text, map2_text;
  std::string proof_path, valuation_path, model = "pointed";
  std::uint64_t nat_unit = 1;
  int max_term_size = -1, max_steps = 12;
  bool reverse = false;

  auto* normalize = app.add_subcommand("normalize", "normal form of a term");
  normalize->add_option("term", term_text)->required();
  normalize->add_flag("--rev", reverse, "reverse normal form instead");

  auto* canonical = app.add_subcommand("canonical-map",
                                       "canonical normalizing map of a term");
  canonical->add_option("term", term_text)->required();

  auto* checkmap = app.add_subcommand("check-map", "type-check a map expression");
  checkmap->add_option("map", map_text)->required();

  auto* checkproof =
      app.add_subcommand("check-proof", "kernel-check a proof s-expression file");
  checkproof->add_option("file", proof_path)->required();

  auto* decide = app.add_subcommand(
      "decide", "prove two parallel maps into a normal form equal");
  decide->add_option("map", map_text)->required();
  decide->add_option("map2", map2_text)->required();
  decide->add_flag("--rev", reverse, "decide out of a reverse normal form");

  auto* search = app.add_subcommand("search", "bounded rewrite search a => b");
  search->add_option("term", term_text)->required();
  search->add_option("term2", term2_text)->required();
  search->add_option("--max-term-size", max_term_size,
                     "largest intermediate term (default size(a)+4)");
  search->add_option("--max-steps", max_steps, "step bound (default 12)");

  auto* eval = app.add_subcommand("eval", "evaluate a map in a finite model");
  eval->add_option("map", map_text)->required();
  eval->add_option("--model", model, "pointed|nat (default pointed)");
  eval->add_option("--valuation", valuation_path, "valuation file");
  eval->add_option("--n", nat_unit, "unit value for the nat model (default 1)");

  auto* separate_cmd =
      app.add_subcommand("separate", "search for a separating pointed valuation");
  separate_cmd->add_option("map", map_text)->required();
  separate_cmd->add_option("map2", map2_text)->required();
  separate_cmd->add_option("--valuation", valuation_path,
                           "use one fixed valuation file instead of the sweep");

  auto* demo = app.add_subcommand("demo", "run the worked examples end to end");
  (void)demo;

  CLI11_PARSE(app, argc, argv);

  try {
    if (normalize->parsed()) {
      Term t = parse_term(term_text);
      std::cout << (reverse ? to_string(nfrev(t)) : to_string(nf(t))) << "\n";
      return kExitOk;
    }

    if (canonical->parsed()) {
      Term t = parse_term(term_text);
      MapExpr m = nm(t);
      std::cout << to_string(m) << "\n";
      std::cout << "  : " << to_string(m.dom()) << " => " << to_string(m.cod())
                << "\n";
      return kExitOk;
    }

    if (checkmap->parsed()) {
      MapExpr m = parse_map(map_text);
      if (auto err = check_map(m)) {
        std::cout << "typing error: " << *err << "\n";
        return kExitBadInput;
      }
      std::cout << "ok: " << to_string(m.dom()) << " => " << to_string(m.cod())
                << "\n";
      return kExitOk;
    }

    if (checkproof->parsed()) {
      EqProof p = parse_proof(read_file(proof_path));
      try {
        Equation eq = check_proof(p);
        std::cout << "ok: " << to_string(eq) << "\n";
        return kExitOk;
      } catch (const KernelError& e) {
        std::cout << "kernel error: " << e.what() << "\n";
        return kExitVerdict;
      }
    }

    if (decide->parsed()) {
      MapExpr f = parse_map(map_text);
      MapExpr g = parse_map(map2_text);
      auto proof = reverse ? decide_equal_from_rev(f, g)
                           : decide_equal_into_nf(f, g);
      if (!proof) {
        std::cout << "NOT-APPLICABLE: "
                  << (reverse ? "domain is not a reverse normal form"
                              : "codomain is not a normal form")
                  << "\n";
        return kExitVerdict;
      }
      Equation eq = check_proof(*proof);
      std::cout << "EQUAL (kernel-checked): " << to_string(eq) << "\n";
      std::cout << to_sexpr(*proof) << "\n";
      return kExitOk;
    }

    if (search->parsed()) {
      Term a = parse_term(term_text);
      Term b = parse_term(term2_text);
      if (max_term_size < 0) max_term_size = a.size() + 4;
      SearchResult res = search_maps(a, b, max_term_size, max_steps);
      switch (res.verdict) {
        case SearchVerdict::NfMismatch:
          std::cout << "NF-MISMATCH: " << to_string(nf(a)) << " vs "
                    << to_string(nf(b)) << "\n";
          return kExitVerdict;
        case SearchVerdict::Exhausted:
          std::cout << "EXHAUSTED (maxTermSize=" << max_term_size
                    << ", maxSteps=" << max_steps << ", explored "
                    << res.explored << " terms)\n";
          return kExitVerdict;
        case SearchVerdict::Found:
          std::cout << "FOUND (" << res.steps.size() << " steps)\n";
          for (const RewriteStep& s : res.steps)
            std::cout << to_string(s) << "\n";
          std::cout << "map: "
                    << to_string(composite_of_steps(res.steps, a)) << "\n";
          return kExitOk;
      }
    }

    if (eval->parsed()) {
      MapExpr m = parse_map(map_text);
      require_well_typed(m);
      if (model == "pointed") {
        PointedFn fn = eval_map_pointed(m, pointed_valuation_for(valuation_path, m));
        std::cout << "dom: size " << fn.from.size << " point " << fn.from.point
                  << "\n";
        std::cout << "cod: size " << fn.to.size << " point " << fn.to.point
                  << "\n";
        std::cout << "table: " << to_string(fn) << "\n";
        return kExitOk;
      }
      if (model == "nat") {
        NatModelParams params{nat_unit, {}};
        if (!valuation_path.empty())
          params.valuation = parse_valuation_file(read_file(valuation_path)).nat;
        std::uint64_t d = eval_term_nat(m.dom(), params);
        std::uint64_t c = eval_term_nat(m.cod(), params);
        std::cout << "dom " << to_string(m.dom()) << " = " << d << "\n";
        std::cout << "cod " << to_string(m.cod()) << " = " << c << "\n";
        std::cout << (d <= c ? "consistent (dom <= cod)\n"
                             : "REFUTED (dom > cod)\n");
        return d <= c ? kExitOk : kExitVerdict;
      }
      std::cerr << "unknown model '" << model << "'\n";
      return kExitBadInput;
    }

    if (separate_cmd->parsed()) {
      MapExpr f = parse_map(map_text);
      MapExpr g = parse_map(map2_text);
      std::vector<PointedValuation> vals;
      if (!valuation_path.empty())
        vals.push_back(parse_valuation_file(read_file(valuation_path)).pointed);
      else
        vals = default_separation_valuations(f, g);
      auto w = separate(f, g, vals);
      if (w) {
        std::cout << "SEPARATED at valuation " << to_string(w->valuation)
                  << " element " << w->element << "\n";
        return kExitOk;
      }
      std::cout << "INDISTINGUISHABLE on " << vals.size() << " valuations\n";
      return kExitVerdict;
    }

    if (demo->parsed()) return run_demo(std::cout) ? kExitOk : kExitVerdict;
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitBadInput;
  } catch (const TypingError& e) {
    std::cerr << "typing error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const KernelError& e) {
    std::cerr << "kernel error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitOk;
}
