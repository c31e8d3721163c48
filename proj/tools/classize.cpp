// Command-line front end: exact set algebra, sizes, congruence
// solving, finite-model checking, and density/outpacing judgments,
// with optional machine-readable output.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "classize/classize.hpp"

using json = nlohmann::ordered_json;
using namespace classize;

namespace {

json size_json(const Size& s) {
  return json{{"rho", s.rho.str()}, {"delta", s.delta.str()}};
}

json solution_json(const std::optional<CrtSolution>& s) {
  if (!s) return nullptr;
  return json{{"residue", s->residue}, {"modulus", s->modulus}};
}

OracleSet resolve_oracle(const std::string& name) {
  if (name == "blocks1010") return oracle_blocks();
  if (name == "squares") return oracle_squares();
  if (name == "evens")
    return oracle_periodic(PeriodicSet::congruence_class(2, 0), "evens");
  if (name == "odds")
    return oracle_periodic(PeriodicSet::congruence_class(2, 1), "odds");
  if (name.rfind("greedy:", 0) == 0) {
    std::string frac = name.substr(7);
    size_t slash = frac.find('/');
    if (slash == std::string::npos)
      throw domain_error("greedy oracle needs a fraction p/q");
    return oracle_greedy(std::stoll(frac.substr(0, slash)),
                         std::stoll(frac.substr(slash + 1)));
  }
  if (name.rfind("set:", 0) == 0)
    return oracle_periodic(parse_set(name.substr(4)), name);
  throw domain_error("unknown oracle '" + name + "'");
}

std::vector<Nat> parse_csv_naturals(const std::string& text) {
  std::vector<Nat> out;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t comma = text.find(',', pos);
    out.push_back(std::stoll(text.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos)));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

struct Outcome {
  int status = 0;
  std::string text;
  json result;
};

int run(int argc, char** argv) {
  CLI::App app{
      "classize: exact sizes, orders and divisibility for eventually "
      "periodic sets of naturals"};
  app.require_subcommand(1);
  app.fallthrough();  // lets --json trail the subcommand arguments
  bool as_json = false;
  app.add_flag("--json", as_json, "emit a JSON object instead of text");

  std::string f_spec = "zero";
  std::string set_a, set_b, set_c, formula_text, oracle_name, in_set;
  std::string node_seq, gen_family;
  std::vector<std::string> gen_args;
  std::int64_t model_n = 1, max_n = 8, budget = 100'000'000;
  std::int64_t horizon = 10000, depth = 2, into = 2, value_n = 0;
  bool with_op = false, no_fast = false;

  auto* size_cmd =
      app.add_subcommand("size", "size of a set under a remainder function");
  size_cmd->add_option("--f", f_spec,
                       "remainder function, \"zero\" or an n:m list");
  size_cmd->add_option("set", set_a, "set expression")->required();

  auto* cmp_cmd = app.add_subcommand("cmp", "compare two sets by size");
  cmp_cmd->add_option("--f", f_spec, "remainder function");
  cmp_cmd->add_flag("--op", with_op,
                    "also report the initial-segment counting judgment");
  cmp_cmd->add_option("x", set_a, "set expression")->required();
  cmp_cmd->add_option("y", set_b, "set expression")->required();

  auto* sum_cmd = app.add_subcommand(
      "sum", "does the third set weigh the sum of the first two");
  sum_cmd->add_option("--f", f_spec, "remainder function");
  sum_cmd->add_option("x", set_a)->required();
  sum_cmd->add_option("y", set_b)->required();
  sum_cmd->add_option("z", set_c)->required();

  auto* eval_cmd = app.add_subcommand(
      "eval", "evaluate a sentence over the power set of {0..n-1}");
  eval_cmd->add_option("--n", model_n, "basis size")->required();
  eval_cmd->add_option("--budget", budget, "atomic evaluation budget");
  eval_cmd->add_flag("--no-fast", no_fast, "skip arithmetic shortcuts");
  eval_cmd->add_option("formula", formula_text)->required();

  auto* cs_cmd = app.add_subcommand(
      "cs-check", "check a sentence in every finite model up to a bound");
  cs_cmd->add_option("--max-n", max_n, "largest basis size")->required();
  cs_cmd->add_option("--budget", budget, "atomic evaluation budget");
  cs_cmd->add_option("formula", formula_text)->required();

  auto* forced_cmd = app.add_subcommand(
      "forced",
      "is a quantifier-free ground sentence settled across every "
      "ultrafilter-built model");
  forced_cmd->add_option("formula", formula_text)->required();

  auto* gen_cmd = app.add_subcommand(
      "gen",
      "print a schema instance: mod n m | div n | atleast n | exactly n | "
      "adiv n | times n x y | modf n m z | divf n z | basic [name]");
  gen_cmd->add_option("family", gen_family)->required();
  gen_cmd->add_option("args", gen_args, "family parameters");

  auto* cong_cmd = app.add_subcommand(
      "congruous", "do the remainders agree modulo all pairwise gcds");
  cong_cmd->add_option("--f", f_spec, "remainder function")->required();

  auto* solve_cmd = app.add_subcommand(
      "solve", "solve the congruence system of a remainder function");
  solve_cmd->add_option("--f", f_spec, "remainder function")->required();

  auto* out_cmd = app.add_subcommand(
      "outpaces", "do initial-segment counts eventually stay ahead");
  out_cmd->add_option("x", set_a)->required();
  out_cmd->add_option("y", set_b)->required();

  auto* dens_cmd = app.add_subcommand("density", "asymptotic density");
  dens_cmd->add_option("set", set_a)->required();
  dens_cmd->add_option("--in", in_set, "relative to this carrier set");

  auto* dest_cmd = app.add_subcommand(
      "density-est", "sampled density verdict for a built-in oracle set");
  dest_cmd
      ->add_option("--oracle", oracle_name,
                   "blocks1010 | squares | evens | odds | greedy:p/q | "
                   "set:<expr>")
      ->required();
  dest_cmd->add_option("--horizon", horizon, "scan limit");

  auto* node_cmd = app.add_subcommand(
      "node", "the congruence class addressed by a factorial-tree node");
  node_cmd->add_option("entries", node_seq, "comma-separated entries")
      ->required();
  node_cmd->add_option("--f", f_spec, "remainder function");

  auto* nodefor_cmd = app.add_subcommand(
      "node-for", "shortest factorial-tree node with the given value");
  nodefor_cmd->add_option("n", value_n)->required();

  auto* part_cmd = app.add_subcommand(
      "partition", "all factorial-tree classes at a depth, with sizes");
  part_cmd->add_option("--f", f_spec, "remainder function");
  part_cmd->add_option("--depth", depth, "tree depth")->required();

  auto* split_cmd = app.add_subcommand(
      "split", "split a union of classes into pieces of near-equal size");
  split_cmd->add_option("--f", f_spec, "remainder function");
  split_cmd->add_option("--set", set_a, "set expression")->required();
  split_cmd->add_option("--into", into, "piece count")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::string command = app.get_subcommands().front()->get_name();
  json inputs;
  Outcome out;

  try {
    if (size_cmd->parsed()) {
      SizedUniverse u(RemainderFn::parse(f_spec));
      PeriodicSet x = parse_set(set_a);
      inputs = {{"f", f_spec}, {"set", x.render()}};
      Size s = u.theta(x);
      out.text = s.str();
      out.result = size_json(s);
    } else if (cmp_cmd->parsed()) {
      SizedUniverse u(RemainderFn::parse(f_spec));
      PeriodicSet x = parse_set(set_a), y = parse_set(set_b);
      inputs = {{"f", f_spec}, {"x", x.render()}, {"y", y.render()}};
      Comparison verdict = u.compare(x, y);
      out.text = to_string(verdict);
      out.result = json{{"theta", to_string(verdict)}};
      if (with_op) {
        // the counting judgment rides alongside the size verdict,
        // never merged into it
        std::string op = outpaces(x, y)   ? "Larger"
                         : outpaces(y, x) ? "Smaller"
                                          : "NoVerdict";
        out.text += "\nop: " + op;
        out.result["op"] = op;
      }
    } else if (sum_cmd->parsed()) {
      SizedUniverse u(RemainderFn::parse(f_spec));
      PeriodicSet x = parse_set(set_a), y = parse_set(set_b),
                  z = parse_set(set_c);
      inputs = {{"f", f_spec},
                {"x", x.render()},
                {"y", y.render()},
                {"z", z.render()}};
      bool holds = u.sum_holds(x, y, z);
      out.text = holds ? "true" : "false";
      out.result = holds;
      out.status = holds ? 0 : 1;
    } else if (eval_cmd->parsed()) {
      FormulaPtr f = parse_formula(formula_text);
      inputs = {{"n", model_n}, {"formula", formula_text}};
      bool truth;
      if (!has_quantifier(f) && free_vars(f).empty())
        truth = eval_ground(f, model_n);
      else
        truth = FiniteModel((int)model_n).evaluate(f, {}, {!no_fast, budget});
      out.text = truth ? "true" : "false";
      out.result = truth;
      out.status = truth ? 0 : 1;
    } else if (cs_cmd->parsed()) {
      FormulaPtr f = parse_formula(formula_text);
      inputs = {{"max_n", max_n}, {"formula", formula_text}};
      CsVerdict v = cs_check(f, (int)max_n, budget);
      out.text = v.str();
      out.result =
          json{{"verdict",
                v.kind == CsVerdict::Kind::HoldsUpTo        ? "holds-up-to"
                : v.kind == CsVerdict::Kind::Counterexample ? "counterexample"
                                                            : "budget-exceeded"},
               {"witness_n", v.n}};
      out.status = v.kind == CsVerdict::Kind::HoldsUpTo ? 0 : 1;
    } else if (forced_cmd->parsed()) {
      FormulaPtr f = parse_formula(formula_text);
      inputs = {{"formula", formula_text}};
      ForcedVerdict v = forced_in_ultrafilter_models(f);
      out.text = v.str();
      if (v.kind == ForcedVerdict::Kind::Contingent) {
        out.result = json{{"verdict", "contingent"},
                          {"pattern", v.pattern.render()}};
      } else {
        bool value = v.kind == ForcedVerdict::Kind::ForcedTrue;
        out.result = json{{"verdict", "forced"},
                          {"value", value},
                          {"pattern", v.pattern.render()}};
        out.status = value ? 0 : 1;
      }
    } else if (gen_cmd->parsed()) {
      inputs = {{"family", gen_family}, {"args", gen_args}};
      auto num = [&](size_t i) {
        if (i >= gen_args.size())
          throw domain_error("missing argument for gen " + gen_family);
        return std::stoi(gen_args[i]);
      };
      FormulaPtr f;
      if (gen_family == "mod") {
        f = mod_sentence(num(0), num(1));
      } else if (gen_family == "div") {
        f = div_sentence(num(0));
      } else if (gen_family == "atleast") {
        f = atleast(num(0));
      } else if (gen_family == "exactly") {
        f = exactly(num(0));
      } else if (gen_family == "adiv") {
        f = adiv_sentence(num(0));
      } else if (gen_family == "times") {
        f = times_formula(num(0), gen_args.at(1), gen_args.at(2));
      } else if (gen_family == "modf") {
        f = mod_formula(num(0), num(1), gen_args.at(2));
      } else if (gen_family == "divf") {
        f = div_formula(num(0), gen_args.at(1));
      } else if (gen_family == "basic") {
        auto axioms = basic_axioms();
        if (gen_args.empty()) {
          std::string text;
          json list = json::array();
          for (auto& [name, axiom] : axioms) {
            text += name + ": " + render(axiom) + "\n";
            list.push_back({{"name", name}, {"formula", render(axiom)}});
          }
          out.text = text.substr(0, text.size() - 1);
          out.result = list;
        } else {
          for (auto& [name, axiom] : axioms)
            if (name == gen_args[0]) f = axiom;
          if (!f) throw domain_error("no axiom named '" + gen_args[0] + "'");
        }
      } else {
        throw domain_error("unknown schema family '" + gen_family + "'");
      }
      if (f) {
        out.text = render(f);
        out.result = out.text;
      }
    } else if (cong_cmd->parsed()) {
      RemainderFn f = RemainderFn::parse(f_spec);
      inputs = {{"f", f_spec}};
      bool ok = is_congruous(f);
      out.text = ok ? "congruous" : "incongruous";
      out.result = json{{"entries", json::object()}, {"congruous", ok}};
      for (auto& [n, v] : f.entries())
        out.result["entries"][std::to_string(n)] = v;
      out.status = ok ? 0 : 1;
    } else if (solve_cmd->parsed()) {
      RemainderFn f = RemainderFn::parse(f_spec);
      inputs = {{"f", f_spec}};
      auto s = solve(f);
      out.text = s ? std::to_string(s->residue) + " mod " +
                         std::to_string(s->modulus)
                   : "no solution";
      out.result = json{{"entries", json::object()},
                        {"congruous", s.has_value()},
                        {"solution", solution_json(s)}};
      for (auto& [n, v] : f.entries())
        out.result["entries"][std::to_string(n)] = v;
      out.status = s ? 0 : 1;
    } else if (out_cmd->parsed()) {
      PeriodicSet x = parse_set(set_a), y = parse_set(set_b);
      inputs = {{"x", x.render()}, {"y", y.render()}};
      bool ahead = outpaces(x, y);
      out.text = ahead ? "true" : "false";
      out.result = ahead;
      out.status = ahead ? 0 : 1;
    } else if (dens_cmd->parsed()) {
      PeriodicSet x = parse_set(set_a);
      inputs = {{"set", x.render()}};
      Rational d;
      if (in_set.empty()) {
        d = density(x);
      } else {
        PeriodicSet y = parse_set(in_set);
        inputs["in"] = y.render();
        d = relative_density(x, y);
      }
      out.text = d.str();
      out.result = d.str();
    } else if (dest_cmd->parsed()) {
      OracleSet x = resolve_oracle(oracle_name);
      inputs = {{"oracle", oracle_name}, {"horizon", horizon}};
      DensityVerdict v = density_estimate(x, horizon);
      out.text = v.str();
      if (v.kind == DensityVerdict::Kind::Converges)
        out.result = json{{"verdict", "converges"}, {"estimate", v.estimate}};
      else if (v.kind == DensityVerdict::Kind::Diverges)
        out.result = json{{"verdict", "diverges"}};
      else
        out.result = json{{"verdict", "unknown"}, {"bound", v.bound}};
    } else if (node_cmd->parsed()) {
      Node p(parse_csv_naturals(node_seq));
      inputs = {{"node", p.str()}, {"f", f_spec}};
      PeriodicSet s = node_set(p);
      SizedUniverse u(RemainderFn::parse(f_spec));
      Size sz = u.theta(s);
      out.text = p.str() + " -> " + s.render() + ", value " +
                 std::to_string(node_value(p)) + ", size " + sz.str();
      out.result = json{{"node", p.str()},
                        {"set", s.render()},
                        {"value", node_value(p)},
                        {"size", size_json(sz)}};
    } else if (nodefor_cmd->parsed()) {
      inputs = {{"n", value_n}};
      Node p = node_for(value_n);
      out.text = p.str();
      out.result = json{{"node", p.str()}, {"depth", p.depth()}};
    } else if (part_cmd->parsed()) {
      SizedUniverse u(RemainderFn::parse(f_spec));
      inputs = {{"f", f_spec}, {"depth", depth}};
      auto pieces = depth_partition(u, depth);
      json list = json::array();
      std::string text;
      for (auto& piece : pieces) {
        text += piece.node.str() + " -> " + piece.set.render() + ", size " +
                piece.size.str() + (piece.charmed ? " (charmed)" : "") + "\n";
        list.push_back({{"node", piece.node.str()},
                        {"set", piece.set.render()},
                        {"size", size_json(piece.size)},
                        {"charmed", piece.charmed}});
      }
      out.text = text.substr(0, text.size() - 1);
      out.result = list;
    } else if (split_cmd->parsed()) {
      SizedUniverse u(RemainderFn::parse(f_spec));
      PeriodicSet x = parse_set(set_a);
      inputs = {{"f", f_spec}, {"set", x.render()}, {"into", into}};
      auto pieces = nm_partition(u, x, into);
      json list = json::array();
      std::string text;
      for (auto& piece : pieces) {
        Size sz = u.theta(piece);
        text += piece.render() + ", size " + sz.str() + "\n";
        list.push_back({{"set", piece.render()}, {"size", size_json(sz)}});
      }
      out.text = text.substr(0, text.size() - 1);
      out.result = list;
    }
  } catch (const parse_error& e) {
    if (as_json) {
      json j = {{"command", command},
                {"inputs", inputs},
                {"result", nullptr},
                {"error", {{"kind", "parse"}, {"message", e.what()}}}};
      std::cout << j.dump() << "\n";
    } else {
      std::cout << "parse error: " << e.what() << "\n";
    }
    return 2;
  } catch (const std::exception& e) {
    if (as_json) {
      json j = {{"command", command},
                {"inputs", inputs},
                {"result", nullptr},
                {"error", {{"kind", "domain"}, {"message", e.what()}}}};
      std::cout << j.dump() << "\n";
    } else {
      std::cout << "error: " << e.what() << "\n";
    }
    return 3;
  }

  if (as_json) {
    json j = {{"command", command},
              {"inputs", inputs},
              {"result", out.result},
              {"error", nullptr}};
    std::cout << j.dump() << "\n";
  } else {
    std::cout << out.text << "\n";
  }
  return out.status;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
