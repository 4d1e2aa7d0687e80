// liqd: resolve ranked-delegation elections, tally them, and check
// the participation axioms. All subcommands speak JSON on stdout;
// diagnostics go to stderr. Exit codes: 0 ok / axiom holds, 1 axiom
// violated, 2 bad input.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "liqd/json_io.hpp"
#include "liqd/oracle.hpp"

using nlohmann::json;

namespace {

void emit(const json& doc, bool pretty) {
  if (pretty)
    std::cout << doc.dump(2) << "\n";
  else
    std::cout << doc.dump() << "\n";
}

liqd::RuleKind parse_rule(const std::string& s) {
  if (s == "dfd") return liqd::RuleKind::DepthFirst;
  if (s == "bfd") return liqd::RuleKind::BreadthFirst;
  throw CLI::ValidationError("--rule must be dfd or bfd");
}

liqd::VotingRule parse_voting_rule(const std::string& s) {
  if (s == "plurality") return liqd::VotingRule::Plurality;
  if (s == "borda") return liqd::VotingRule::Borda;
  throw CLI::ValidationError("--voting-rule must be plurality or borda");
}

liqd::Election load_checked(const std::string& path) {
  liqd::Election e = liqd::load_election(path);
  auto report = liqd::validate(e);
  if (!report.ok()) {
    for (const auto& v : report.violations) std::cerr << "error: " << v << "\n";
    throw std::runtime_error("invalid election");
  }
  return e;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ranked-delegation liquid democracy toolkit"};
  app.require_subcommand(1);
  bool pretty = false;
  app.add_flag("--pretty", pretty, "pretty-print JSON output");

  // gen
  auto* gen = app.add_subcommand("gen", "generate a random election");
  liqd::GeneratorConfig config;
  std::string out_path = "-";
  gen->add_option("--seed", config.seed, "generator seed");
  gen->add_option("--voters", config.n_voters, "number of voters");
  gen->add_option("--alternatives", config.n_alternatives, "number of alternatives");
  gen->add_option("--max-rank", config.max_ranking_len, "max delegation ranking length");
  gen->add_option("--cycle-bias", config.cycle_bias, "bias delegations toward other delegators");
  gen->add_flag("--dag-only", config.dag_only, "emit only acyclic delegation graphs");
  gen->add_option("--frac-cast", config.frac_casting, "casting fraction");
  gen->add_option("--frac-delegate", config.frac_delegating, "delegating fraction");
  gen->add_option("--frac-abstain", config.frac_abstaining, "abstaining fraction");
  gen->add_option("--out", out_path, "output file, - for stdout");

  // resolve
  auto* resolve_cmd = app.add_subcommand("resolve", "resolve delegations to dispositions");
  std::string rule_name = "dfd";
  std::string input_path = "-";
  bool emit_chains = false;
  bool emit_dot = false;
  resolve_cmd->add_option("--rule", rule_name, "delegation rule: dfd or bfd");
  resolve_cmd->add_option("--input", input_path, "election JSON, - for stdin");
  resolve_cmd->add_flag("--emit-chains", emit_chains, "include the minimal chain per delegator");
  resolve_cmd->add_flag("--emit-dot", emit_dot, "print the delegation graph as DOT instead of JSON");

  // tally
  auto* tally_cmd = app.add_subcommand("tally", "resolve and tally an election");
  std::string tally_rule = "dfd";
  std::string voting_rule_name = "plurality";
  std::string tally_input = "-";
  tally_cmd->add_option("--rule", tally_rule, "delegation rule: dfd or bfd");
  tally_cmd->add_option("--voting-rule", voting_rule_name, "plurality or borda");
  tally_cmd->add_option("--input", tally_input, "election JSON, - for stdin");

  // check
  auto* check_cmd = app.add_subcommand("check", "check a participation axiom");
  std::string axiom_name = "guru";
  std::string check_rule = "dfd";
  std::string check_voting_rule = "plurality";
  std::string check_input;
  std::string focal_voter;
  liqd::GeneratorConfig search_config;
  search_config.n_voters = 6;
  search_config.cycle_bias = 0.5;
  long samples = 10000;
  check_cmd->add_option("--axiom", axiom_name, "guru or cast");
  check_cmd->add_option("--rule", check_rule, "delegation rule: dfd or bfd");
  check_cmd->add_option("--voting-rule", check_voting_rule, "plurality or borda");
  check_cmd->add_option("--input", check_input, "check one election instead of searching");
  check_cmd->add_option("--voter", focal_voter, "focal voter for an instance check");
  check_cmd->add_option("--seed", search_config.seed, "search seed");
  check_cmd->add_option("--samples", samples, "search budget");
  check_cmd->add_option("--voters", search_config.n_voters, "voters per sampled election");
  check_cmd->add_option("--alternatives", search_config.n_alternatives, "alternatives per sampled election");
  check_cmd->add_option("--cycle-bias", search_config.cycle_bias, "generator cycle bias");
  check_cmd->add_flag("--dag-only", search_config.dag_only, "sample acyclic graphs only");

  // oracle-compare
  auto* oracle_cmd = app.add_subcommand(
      "oracle-compare", "compare the resolver against brute-force chain enumeration");
  std::string oracle_rule = "dfd";
  std::string oracle_input = "-";
  oracle_cmd->add_option("--rule", oracle_rule, "delegation rule: dfd or bfd");
  oracle_cmd->add_option("--input", oracle_input, "election JSON, - for stdin");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      json doc = liqd::election_to_json(liqd::generate(config));
      if (out_path == "-") {
        emit(doc, pretty);
      } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot write " + out_path);
        out << doc.dump(pretty ? 2 : -1) << "\n";
      }
      return 0;
    }

    if (resolve_cmd->parsed()) {
      liqd::Election e = load_checked(input_path);
      auto rule = parse_rule(rule_name);
      auto part = liqd::classify(e);
      auto graph = liqd::build_graph(e, part);
      if (emit_dot) {
        std::cout << liqd::to_dot(graph, part);
        return 0;
      }
      auto resolved = liqd::resolve(e, graph, part, rule);
      emit(liqd::resolution_to_json(resolved, emit_chains), pretty);
      return 0;
    }

    if (tally_cmd->parsed()) {
      liqd::Election e = load_checked(tally_input);
      auto resolved = liqd::resolve(e, parse_rule(tally_rule));
      auto result = liqd::tally(resolved, e, parse_voting_rule(voting_rule_name));
      emit(liqd::tally_to_json(result), pretty);
      return 0;
    }

    if (check_cmd->parsed()) {
      auto rule = parse_rule(check_rule);
      auto voting_rule = parse_voting_rule(check_voting_rule);
      const bool guru_axiom = axiom_name == "guru";
      if (!guru_axiom && axiom_name != "cast")
        throw std::runtime_error("--axiom must be guru or cast");

      liqd::ParticipationReport report;
      report.axiom = guru_axiom ? liqd::Axiom::Guru : liqd::Axiom::Cast;
      report.rule = rule;
      report.voting_rule = voting_rule;

      if (!check_input.empty()) {
        if (focal_voter.empty())
          throw std::runtime_error("instance check needs --voter");
        liqd::Election e = load_checked(check_input);
        report.samples_checked = 1;
        if (guru_axiom) {
          auto check = liqd::check_guru_instance(e, rule, voting_rule, focal_voter);
          report.violated = check.verdict == liqd::Verdict::Violated;
          report.counterexample = liqd::Counterexample{
              e, focal_voter, check.guru, check.winner_with, check.winner_without};
        } else {
          auto check = liqd::check_cast_instance(e, rule, voting_rule, focal_voter);
          report.violated = check.verdict == liqd::Verdict::Violated;
          report.counterexample = liqd::Counterexample{
              e, focal_voter, focal_voter, check.winner_with, check.winner_without};
        }
      } else {
        report = guru_axiom
                     ? liqd::search_guru_violation(search_config, rule, voting_rule, samples)
                     : liqd::search_cast_violation(search_config, rule, voting_rule, samples);
      }
      emit(liqd::report_to_json(report), pretty);
      return report.violated ? 1 : 0;
    }

    if (oracle_cmd->parsed()) {
      liqd::Election e = load_checked(oracle_input);
      auto mismatches = liqd::oracle_compare(e, parse_rule(oracle_rule));
      json doc = json::array();
      for (const auto& m : mismatches)
        doc.push_back({{"voter", m.voter},
                       {"resolver_guru",
                        m.resolver_guru ? json(*m.resolver_guru) : json(nullptr)},
                       {"oracle_guru",
                        m.oracle_guru ? json(*m.oracle_guru) : json(nullptr)}});
      emit(json{{"mismatches", doc}}, pretty);
      return mismatches.empty() ? 0 : 1;
    }
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  }
  return 2;
}
