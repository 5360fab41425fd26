// Command-line driver: normalize designs, test orthogonality, run proof
// search, build countermodels, enumerate members, and work with the linear
// logic formula translations.
//
// Exit codes: 0 converged/derivable, 1 refuted/diverges/underivable (with a
// certificate printed), 2 inconclusive within fuel, 3 usage or parse error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ludics/countermodel.hpp"
#include "ludics/llp.hpp"
#include "ludics/ops.hpp"
#include "ludics/parse.hpp"
#include "ludics/print.hpp"

namespace {

using namespace ludics;

struct Options {
  std::uint64_t fuel = 100000;
  int depth = 8;
  std::size_t samples = 20;
  std::size_t size = 12;
  std::string format = "text";
  bool linear = false;
};

bool report_mode(const Options& o) { return o.format == "report"; }

void emit(const Options& o, const std::string& key, const std::string& value) {
  if (report_mode(o))
    std::cout << key << ": " << value << "\n";
  else
    std::cout << key << ": " << value << "\n";
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Daimon: return "daimon";
    case Verdict::Omega: return "omega";
    default: return "unknown";
  }
}

int verdict_exit(Verdict v) {
  switch (v) {
    case Verdict::Daimon: return 0;
    case Verdict::Omega: return 1;
    default: return 2;
  }
}

void emit_outcome(const Options& o, const EvalOutcome& out) {
  emit(o, "verdict", verdict_name(out.verdict));
  emit(o, "explored", std::to_string(out.explored));
  if (out.verdict == Verdict::Omega) {
    emit(o, "certificate", out.cycle ? "cycle" : "omega-state");
    for (auto& s : out.path) emit(o, "path", s);
  }
}

int cmd_normalize(const Options& o, const std::string& file) {
  Engine eng;
  DesignPtr d = parse_design(slurp(file), eng);
  DesignPtr nf = normal_form(d, eng, o.fuel, o.depth);
  emit(o, "normal-form", print_design(nf));
  if (is_positive(d, eng.defs) && free_vars(d, eng.defs).empty()) {
    EvalOutcome out = evaluate_closed(d, eng, o.fuel);
    emit_outcome(o, out);
    return verdict_exit(out.verdict);
  }
  return 0;
}

int cmd_orthogonal(const Options& o, const std::string& pfile,
                   const std::string& nfile) {
  Engine eng;
  DesignPtr p = parse_design(slurp(pfile), eng);
  DesignPtr n = parse_design(slurp(nfile), eng);
  EvalOutcome out = orthogonal(p, n, eng, o.fuel);
  emit_outcome(o, out);
  return verdict_exit(out.verdict);
}

void emit_branch(const Options& o, const OpenBranch& br) {
  switch (br.end) {
    case BranchEnd::StuckOmega:
      emit(o, "stuck", "omega");
      break;
    case BranchEnd::StuckName:
      emit(o, "stuck", "name");
      emit(o, "stuck-name", br.stuck_name);
      if (br.blocking) emit(o, "blocking", print_behaviour(br.blocking));
      break;
    case BranchEnd::Truncated:
      emit(o, "stuck", "truncated");
      break;
    case BranchEnd::Periodic:
      emit(o, "stuck", "periodic");
      emit(o, "period-start", std::to_string(br.period_start));
      break;
  }
  emit(o, "branch-length", std::to_string(br.steps.size()));
  emit(o, "terminal", print_design(br.terminal.subject));
}

int cmd_prove(const Options& o, const std::string& file) {
  Engine eng;
  Sequent s = parse_sequent(slurp(file), eng);
  ProveResult res = prove(s, eng, o.fuel, o.linear);
  switch (res.kind) {
    case ProveResult::Derived:
      emit(o, "result", "derivable");
      std::cout << print_derivation(*res.derivation);
      return 0;
    case ProveResult::Failed:
      emit(o, "result", "underivable");
      emit_branch(o, *res.branch);
      return 1;
    case ProveResult::OutOfFuel:
      if (res.branch && res.branch->end == BranchEnd::Periodic) {
        emit(o, "result", "underivable");
        emit_branch(o, *res.branch);
        return 1;
      }
      emit(o, "result", "unknown");
      if (res.branch) emit_branch(o, *res.branch);
      return 2;
  }
  return 2;
}

int cmd_countermodel(const Options& o, const std::string& file) {
  Engine eng;
  Sequent s = parse_sequent(slurp(file), eng);
  auto br = open_branch(s, eng, o.fuel, o.linear);
  if (!br) {
    emit(o, "result", "derivable");
    return 1;
  }
  emit_branch(o, *br);
  ModelAssignment ma = br->end == BranchEnd::Truncated
                           ? build_approximant(*br, eng, br->steps.size())
                           : build_countermodel(*br, eng);
  if (ma.cyclic) {
    emit(o, "cyclic", "true");
    emit(o, "definitions", std::to_string(eng.defs.all().size()));
  }
  for (auto& [x, m] : ma.models) emit(o, "M(" + x + ")", print_design(m));
  if (ma.counter_positive)
    emit(o, "counter-design", print_design(ma.counter_positive));
  DefeatReport dr = verify_defeat(*br, ma, eng, o.fuel);
  emit(o, "defeat", verdict_name(dr.verdict));
  emit(o, "defeat-detail", dr.detail);
  MembershipReport mr =
      verify_countermodel_membership(*br, ma, eng, o.fuel, o.samples);
  emit(o, "membership-checks", std::to_string(mr.checks));
  emit(o, "membership", mr.all_passed ? "pass" : "fail");
  if (!mr.detail.empty()) std::cout << mr.detail;
  if (br->end == BranchEnd::Truncated) return 2;
  return dr.verdict == Verdict::Omega && mr.all_passed ? 0 : 2;
}

int cmd_enumerate(const Options& o, const std::string& text) {
  Engine eng;
  ConnectiveTable table;
  BehaviourPtr b = parse_behaviour(text, table);
  std::vector<DesignPtr> ms = b->pol == Polarity::Positive
                                  ? ethics_members(b, eng, o.size)
                                  : members_negative(b, eng, o.size);
  emit(o, "behaviour", print_behaviour(b));
  emit(o, "count", std::to_string(ms.size()));
  for (auto& m : ms) std::cout << print_design(m) << "\n";
  return 0;
}

int cmd_llp_check(const Options& o, const std::string& text) {
  Engine eng;
  LLPSequent s = parse_llp_sequent(text);
  emit(o, "sequent", print_llp_sequent(s));
  LLPResult a = prove_llp(s, eng, o.fuel);
  LLPResult b = prove_llp_syn_direct(s, o.fuel);
  auto name = [](LLPResult::Kind k) {
    return k == LLPResult::Derivable ? "derivable"
           : k == LLPResult::Underivable ? "underivable"
                                         : "unknown";
  };
  emit(o, "translated", name(a.kind));
  emit(o, "direct", name(b.kind));
  if (a.kind != b.kind) {
    emit(o, "agreement", "MISMATCH");
    return 2;
  }
  if (a.kind == LLPResult::Derivable) {
    if (a.witness) emit(o, "witness", print_design(a.witness));
    return 0;
  }
  return a.kind == LLPResult::Underivable ? 1 : 2;
}

int cmd_llp_translate(const Options& o, const std::string& text) {
  Engine eng;
  LLPPtr f = parse_llp(text);
  BehaviourPtr b = bullet(f, eng);
  std::map<std::string, Connective> conns;
  collect_connectives(b, conns);
  for (auto& [n, c] : conns) std::cout << print_connective(c) << "\n";
  emit(o, "behaviour", print_behaviour(b));
  return 0;
}

int cmd_llp_roundtrip(const Options& o, const std::string& text) {
  Engine eng;
  LLPPtr f = parse_llp(text);
  BehaviourPtr b = bullet(f, eng);
  LLPPtr back = circ(b);
  emit(o, "formula", print_llp(f));
  emit(o, "behaviour", print_behaviour(b));
  emit(o, "back", print_llp(back));
  bool ok = erased_equal(b, bullet(back, eng));
  emit(o, "roundtrip", ok ? "pass" : "fail");
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"ludics toolkit"};
  app.require_subcommand(1);
  app.add_option("--fuel", o.fuel, "evaluation/search fuel")
      ->check(CLI::PositiveNumber);
  app.add_option("--depth", o.depth, "normal form depth")
      ->check(CLI::PositiveNumber);
  app.add_option("--samples", o.samples, "orthogonality samples")
      ->check(CLI::PositiveNumber);
  app.add_option("--size", o.size, "member enumeration size bound")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"text", "report"}));
  app.add_flag("--linear", o.linear, "use the linearized positive rule");

  std::string file, file2, inline_text;
  auto* normalize = app.add_subcommand("normalize", "normal form of a design file");
  normalize->fallthrough();
  normalize->add_option("file", file)->required();
  auto* orth = app.add_subcommand("orthogonal", "interaction of P and N");
  orth->fallthrough();
  orth->add_option("positive", file)->required();
  orth->add_option("negative", file2)->required();
  auto* prove = app.add_subcommand("prove", "deterministic proof search");
  prove->fallthrough();
  prove->add_option("file", file)->required();
  auto* cm = app.add_subcommand("countermodel", "countermodel from failed search");
  cm->fallthrough();
  cm->add_option("file", file)->required();
  auto* en = app.add_subcommand("enumerate", "enumerate behaviour members");
  en->fallthrough();
  en->add_option("behaviour", inline_text)->required();
  auto* llp = app.add_subcommand("llp", "linear logic formulas");
  llp->fallthrough();
  llp->require_subcommand(1);
  auto* lcheck = llp->add_subcommand("check", "prove a strict sequent");
  lcheck->fallthrough();
  lcheck->add_option("sequent", inline_text)->required();
  auto* ltr = llp->add_subcommand("translate", "formula to behaviour");
  ltr->fallthrough();
  ltr->add_option("formula", inline_text)->required();
  auto* lrt = llp->add_subcommand("roundtrip", "formula-behaviour roundtrip");
  lrt->fallthrough();
  lrt->add_option("formula", inline_text)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 3;
  }

  try {
    if (normalize->parsed()) return cmd_normalize(o, file);
    if (orth->parsed()) return cmd_orthogonal(o, file, file2);
    if (prove->parsed()) return cmd_prove(o, file);
    if (cm->parsed()) return cmd_countermodel(o, file);
    if (en->parsed()) return cmd_enumerate(o, inline_text);
    if (lcheck->parsed()) return cmd_llp_check(o, inline_text);
    if (ltr->parsed()) return cmd_llp_translate(o, inline_text);
    if (lrt->parsed()) return cmd_llp_roundtrip(o, inline_text);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 3;
}
