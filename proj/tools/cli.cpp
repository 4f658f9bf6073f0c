#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <set>

#include <CLI11.hpp>

#include "anet/engine.hpp"
#include "anet/error.hpp"
#include "anet/evaluate.hpp"
#include "anet/model_io.hpp"
#include "anet/structures.hpp"
#include "anet/theorem2.hpp"
#include "anet/tm_automaton.hpp"
#include "anet/trace_io.hpp"
#include "anet/type_automaton.hpp"
#include "anet/types.hpp"

namespace anet::cli {

namespace {

struct Options {
  std::string file;
  unsigned n = 0;
  std::string point;
  std::string formula;
  bool fo = false;
  std::string var = "x";
  unsigned level = 0;
  std::string node;
  std::size_t max_size = 10000;
  std::string automaton;
  std::size_t cap = 0;
  std::string accept;
  std::string trace;
  std::string out = "report.json";
};

int report_validation(const ValidationReport& report, std::ostream& out) {
  if (report.ok()) {
    out << "ok\n";
    return kOk;
  }
  out << report.to_string();
  if (!report.to_string().ends_with('\n')) out << '\n';
  return kFailure;
}

int cmd_eval(const Options& o, std::ostream& out) {
  const Model model = load_model_file(o.file);
  const NodeId w = model.node(o.point);
  bool holds = false;
  if (o.fo) {
    const FoFormula phi = parse_fo(o.formula, &model.signature());
    holds = eval_fo(model, Assignment{{o.var, w}}, phi);
  } else {
    const ModalFormula phi = parse_modal(o.formula, &model.signature());
    holds = eval_modal(PointedModel(model, w), phi);
  }
  out << (holds ? "true" : "false") << '\n';
  return holds ? kOk : kFailure;
}

int cmd_translate(const Options& o, std::ostream& out) {
  out << standard_translation(parse_modal(o.formula), o.var).to_string() << '\n';
  return kOk;
}

void print_dag(TypeId root, const TypeTable& table, std::ostream& out) {
  std::set<TypeId> seen;
  std::vector<TypeId> stack{root};
  while (!stack.empty()) {
    const TypeId t = stack.back();
    stack.pop_back();
    if (!seen.insert(t).second) continue;
    if (auto prev = table.previous(t)) stack.push_back(*prev);
    for (SymbolIndex r = 0; r < table.signature().binary().size(); ++r) {
      for (TypeId c : table.children(t, r)) stack.push_back(c);
    }
  }
  for (TypeId t : seen) out << "  " << TypeTable::name(t) << " = " << table.describe(t) << '\n';
}

int cmd_types(const Options& o, std::ostream& out) {
  const Model model = load_model_file(o.file);
  TypeTable table(model.signature());
  const auto levels = compute_type_levels(model, o.level, table);
  std::set<TypeId> used;
  for (unsigned m = 0; m <= o.level; ++m) {
    out << "level " << m << '\n';
    for (NodeId w = 0; w < model.size(); ++w) {
      out << "  " << model.name(w) << ' ' << TypeTable::name(levels[m][w]) << '\n';
      used.insert(levels[m][w]);
    }
  }
  out << "types\n";
  for (TypeId t : used) out << "  " << TypeTable::name(t) << " = " << table.describe(t) << '\n';

  if (!o.node.empty()) {
    const TypeId t = levels[o.level][model.node(o.node)];
    const ModalFormula phi = type_to_formula(t, table);
    const std::size_t size = phi.tree_size(o.max_size + 1);
    out << "formula " << o.node << '\n';
    if (size > o.max_size) {
      out << "  (printed form exceeds " << o.max_size << " symbols; showing the type DAG)\n";
      print_dag(t, table, out);
    } else {
      out << "  " << phi.to_string() << '\n';
    }
  }
  return kOk;
}

void print_verdicts(const Model& model, const std::vector<Verdict>& verdicts, std::ostream& out) {
  for (NodeId w = 0; w < model.size(); ++w) {
    out << model.name(w) << ' ' << verdicts[w].to_string() << '\n';
  }
}

template <class A>
int finish_run(const Model& model, const A& a, const Options& o, std::ostream& out) {
  const auto trace = run(model, a, o.cap);
  std::vector<Verdict> verdicts;
  for (NodeId w = 0; w < model.size(); ++w) verdicts.push_back(verdict(trace, a, w));
  print_verdicts(model, verdicts, out);
  if (!o.trace.empty()) {
    std::ofstream file(o.trace);
    if (!file) throw InputError("cannot write " + o.trace);
    write_trace_jsonl(file, trace, a);
  }
  return kOk;
}

int cmd_run(const Options& o, std::ostream& out) {
  const Model model = load_model_file(o.file);
  if (o.automaton == "tm") {
    if (!o.accept.empty()) throw CLI::ValidationError("--accept", "only applies to --automaton type");
    return finish_run(model, build_tm_automaton(), o, out);
  }
  TypeTable table(model.signature());
  std::set<TypeId> accepting;
  std::set<TypeId> rejecting;
  if (!o.accept.empty()) {
    // Accept the realised level-md(phi) types whose nodes satisfy phi and
    // reject the remaining realised ones.
    const ModalFormula phi = parse_modal(o.accept, &model.signature());
    const auto types = compute_types(model, modal_depth(phi), table);
    const auto truth = satisfying_nodes(model, phi);
    for (NodeId w = 0; w < model.size(); ++w) (truth[w] ? accepting : rejecting).insert(types[w]);
  }
  const TypeAutomaton a =
      make_type_automaton(model.signature(), std::move(accepting), std::move(rejecting), table);
  return finish_run(model, a, o, out);
}

int cmd_experiment(const Options& o, std::ostream& out) {
  if (o.n <= 10) throw CLI::ValidationError("--n", "must be greater than 10");
  const Theorem2Report report = run_theorem2_experiment(o.n);
  std::ofstream file(o.out);
  if (!file) throw InputError("cannot write " + o.out);
  file << report.to_json();
  out << report.summary();
  if (!report.decided()) return kFailure;
  return report.differ && report.balls_isomorphic ? kOk : kFailure;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Message-passing automata on relational models", "anet"};
  app.require_subcommand(1);
  Options o;

  auto* vsb = app.add_subcommand("validate-sb", "Check the single symmetric irreflexive relation format");
  vsb->add_option("file", o.file, "Model file")->required();

  auto* vpn = app.add_subcommand("validate-pn", "Check the port-numbering conditions 1-7");
  vpn->add_option("file", o.file, "Model file")->required();
  vpn->add_option("--n", o.n, "Degree bound")->required();

  auto* ev = app.add_subcommand("eval", "Evaluate a formula at a node");
  ev->add_option("file", o.file, "Model file")->required();
  ev->add_option("--point", o.point, "Node name")->required();
  ev->add_option("--formula", o.formula, "Formula text")->required();
  ev->add_flag("--fo", o.fo, "Read the formula as first-order");
  ev->add_option("--var", o.var, "Variable bound to the point (with --fo)")->capture_default_str();

  auto* tr = app.add_subcommand("translate", "Standard translation of a modal formula");
  tr->add_option("--formula", o.formula, "Modal formula")->required();
  tr->add_option("--var", o.var, "Free variable")->capture_default_str();

  auto* ty = app.add_subcommand("types", "Type ids of every node up to a level");
  ty->add_option("file", o.file, "Model file")->required();
  ty->add_option("--level", o.level, "Highest level")->required();
  ty->add_option("--node", o.node, "Also print the type formula of this node");
  ty->add_option("--max-size", o.max_size, "Largest formula printed in full")->capture_default_str();

  auto* rn = app.add_subcommand("run", "Run an automaton and print per-node verdicts");
  rn->add_option("file", o.file, "Model file")->required();
  rn->add_option("--automaton", o.automaton, "type or tm")
      ->required()
      ->check(CLI::IsMember({"type", "tm"}));
  rn->add_option("--cap", o.cap, "Number of rounds")->required();
  rn->add_option("--accept", o.accept, "Modal formula whose types are accepted (type automaton)");
  rn->add_option("--trace", o.trace, "Write the trace as JSON lines");

  auto* tm = app.add_subcommand("tm-run", "Run the TM automaton (same as run --automaton tm)");
  tm->add_option("file", o.file, "Model file")->required();
  tm->add_option("--cap", o.cap, "Number of rounds")->required();
  tm->add_option("--trace", o.trace, "Write the trace as JSON lines");

  auto* ex = app.add_subcommand("experiment", "Two Thue-Morse paths that look alike around node 3n");
  ex->add_option("--n", o.n, "Radius, greater than 10")->required();
  ex->add_option("--out", o.out, "Report file")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (vsb->parsed()) return report_validation(validate_sb(load_model_file(o.file)), out);
    if (vpn->parsed()) return report_validation(validate_pn(load_model_file(o.file), o.n), out);
    if (ev->parsed()) return cmd_eval(o, out);
    if (tr->parsed()) return cmd_translate(o, out);
    if (ty->parsed()) return cmd_types(o, out);
    if (rn->parsed()) return cmd_run(o, out);
    if (tm->parsed()) {
      o.automaton = "tm";
      return cmd_run(o, out);
    }
    if (ex->parsed()) return cmd_experiment(o, out);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const CapacityError& e) {
    err << "capacity exceeded: " << e.what() << '\n';
    return kFailure;
  }
  return kUsage;
}

}  // namespace anet::cli
