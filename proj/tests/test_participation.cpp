#include <doctest.h>

#include <stdexcept>

#include "fixtures.hpp"
#include "liqd/graph.hpp"
#include "liqd/participation.hpp"

using namespace liqd;
using testing::fig1a;
using testing::fig1b;

TEST_CASE("depth-first delegation punishes guru s when t joins") {
  auto check = check_guru_instance(fig1b(), RuleKind::DepthFirst,
                                  VotingRule::Plurality, "t");
  CHECK(check.guru == VoterId("s"));
  CHECK(check.winner_with == AlternativeId("Yes"));
  CHECK(check.winner_without == AlternativeId("No"));
  CHECK(check.verdict == Verdict::Violated);
}

TEST_CASE("breadth-first delegation keeps guru participation on the same instance") {
  auto check = check_guru_instance(fig1b(), RuleKind::BreadthFirst,
                                  VotingRule::Plurality, "t");
  CHECK(check.guru == VoterId("r"));
  CHECK(check.verdict == Verdict::Holds);
}

TEST_CASE("equal outcomes satisfy weak preference") {
  // Under BFD, q's guru is s in both fig1a and fig1b; the winner is
  // No (1a, tie-break) vs Yes (1b) — check a voter whose removal
  // changes nothing instead: p's guru r, winner stays Yes.
  auto check = check_guru_instance(fig1b(), RuleKind::BreadthFirst,
                                  VotingRule::Plurality, "q");
  CHECK(check.verdict == Verdict::Holds);
}

TEST_CASE("an unassigned delegator is rejected") {
  Election e = fig1a();
  e.delegations.push_back({"u", {"t"}});
  e.registered.push_back("u");
  CHECK_THROWS_AS(
      check_guru_instance(e, RuleKind::DepthFirst, VotingRule::Plurality, "u"),
      std::invalid_argument);
}

TEST_CASE("cast participation holds for r on both figures") {
  for (const Election& e : {fig1a(), fig1b()})
    for (auto rule : {RuleKind::DepthFirst, RuleKind::BreadthFirst}) {
      auto check = check_cast_instance(e, rule, VotingRule::Plurality, "r");
      CHECK(check.verdict == Verdict::Holds);
    }
}

TEST_CASE("removing the only caster leaves no winner, which is weakly worse") {
  Election e;
  e.alternatives = {"Yes", "No"};
  e.ballots = {{"c", {"Yes", "No"}}};
  e.registered = {"c"};
  auto check =
      check_cast_instance(e, RuleKind::DepthFirst, VotingRule::Plurality, "c");
  CHECK_FALSE(check.winner_without.has_value());
  CHECK(check.verdict == Verdict::Holds);
}

TEST_CASE("check_cast_instance rejects non-casters") {
  CHECK_THROWS_AS(check_cast_instance(fig1a(), RuleKind::DepthFirst,
                                      VotingRule::Plurality, "t"),
                  std::invalid_argument);
}

TEST_CASE("strictly_prefers never infers unstated preferences") {
  Election e;
  e.alternatives = {"A", "B", "C"};
  e.ballots = {{"v", {"A", "B"}}};
  e.registered = {"v"};
  CHECK(strictly_prefers(e, "v", AlternativeId("A"), AlternativeId("B")));
  CHECK_FALSE(strictly_prefers(e, "v", AlternativeId("B"), AlternativeId("A")));
  CHECK_FALSE(strictly_prefers(e, "v", AlternativeId("A"), AlternativeId("C")));
  CHECK_FALSE(strictly_prefers(e, "v", AlternativeId("A"), std::nullopt));
  CHECK_FALSE(strictly_prefers(e, "v", std::nullopt, AlternativeId("A")));
  CHECK_FALSE(strictly_prefers(e, "v", AlternativeId("A"), AlternativeId("A")));
}

TEST_CASE("single-guru delta across the figure pair") {
  Election before_e = fig1a();
  Election after_e = fig1b();

  auto before_bfd = resolve(before_e, RuleKind::BreadthFirst);
  auto after_bfd = resolve(after_e, RuleKind::BreadthFirst);
  CHECK(check_single_guru_delta(before_bfd, after_bfd, "t"));

  auto before_dfd = resolve(before_e, RuleKind::DepthFirst);
  auto after_dfd = resolve(after_e, RuleKind::DepthFirst);
  CHECK_FALSE(check_single_guru_delta(before_dfd, after_dfd, "t"));
}

TEST_CASE("a joiner with no chain changes nothing") {
  Election before_e = fig1a();
  Election after_e = with_delegation(before_e, {"u", {"t"}});
  after_e.registered.push_back("u");
  before_e.registered.push_back("u");
  auto before = resolve(before_e, RuleKind::DepthFirst);
  auto after = resolve(after_e, RuleKind::DepthFirst);
  CHECK(after.of("u").kind == Disposition::Kind::Abstains);
  CHECK(check_single_guru_delta(before, after, "u"));
}

TEST_CASE("acyclic depth-first delegation satisfies the single-guru premise") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    GeneratorConfig config;
    config.seed = seed;
    config.n_voters = 3 + static_cast<int>(seed % 7);
    config.dag_only = true;
    Election e = generate(config);
    auto part = classify(e);
    auto after = resolve(e, RuleKind::DepthFirst);
    for (const auto& j : part.delegating) {
      auto before = resolve(without_delegation(e, j), RuleKind::DepthFirst);
      CHECK(check_single_guru_delta(before, after, j));
    }
  }
}

TEST_CASE("single-guru premise plus scoring rule implies guru holds") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    GeneratorConfig config;
    config.seed = seed;
    config.n_voters = 3 + static_cast<int>(seed % 7);
    config.cycle_bias = 0.5;
    Election e = generate(config);
    auto part = classify(e);
    auto after = resolve(e, RuleKind::DepthFirst);
    for (const auto& j : part.delegating) {
      if (after.of(j).kind != Disposition::Kind::DelegatesTo) continue;
      auto before = resolve(without_delegation(e, j), RuleKind::DepthFirst);
      if (!check_single_guru_delta(before, after, j)) continue;
      for (auto vr : {VotingRule::Plurality, VotingRule::Borda}) {
        auto check = check_guru_instance(e, RuleKind::DepthFirst, vr, j);
        CHECK(check.verdict == Verdict::Holds);
      }
    }
  }
}

TEST_CASE("resolute tie-breaking can fail the guru even on acyclic graphs") {
  // With three or more alternatives the guru guarantee is only about
  // the guru's weak preference over tied score vectors; the
  // lexicographic winner tie-break can resolve both ties against the
  // guru.  Here k's vote moves from l to i when j joins: without j
  // the tie {A,B} resolves to A, with j the tie {B,C} resolves to B,
  // and i ranks A above B.  This is why the acyclic sweep in the
  // acceptance suite fixes the corpus at two alternatives, where the
  // guarantee survives any tie-break.
  Election e;
  e.alternatives = {"A", "B", "C"};
  e.ballots = {{"l", {"A", "B", "C"}},
               {"x", {"B", "A", "C"}},
               {"i", {"C", "A", "B"}}};
  e.delegations = {{"d1", {"l"}}, {"d2", {"x"}}, {"d3", {"x"}},
                   {"k", {"j", "l"}}, {"j", {"i"}}};
  e.registered = {"l", "x", "i", "d1", "d2", "d3", "k", "j"};
  REQUIRE_FALSE(has_cycle(build_graph(e, classify(e))));

  auto check =
      check_guru_instance(e, RuleKind::DepthFirst, VotingRule::Plurality, "j");
  CHECK(check.guru == VoterId("i"));
  CHECK(check.winner_with == AlternativeId("B"));
  CHECK(check.winner_without == AlternativeId("A"));
  CHECK(check.verdict == Verdict::Violated);
}

TEST_CASE("search finds the depth-first violation and reports it replayably") {
  GeneratorConfig config;
  config.seed = 1;
  config.n_voters = 5;
  config.cycle_bias = 0.7;
  auto report = search_guru_violation(config, RuleKind::DepthFirst,
                                      VotingRule::Plurality, 2000);
  REQUIRE(report.violated);
  REQUIRE(report.counterexample.has_value());
  const Counterexample& cex = *report.counterexample;

  // replay
  auto check = check_guru_instance(cex.election, RuleKind::DepthFirst,
                                   VotingRule::Plurality, cex.joiner);
  CHECK(check.verdict == Verdict::Violated);
  CHECK(check.guru == cex.guru);
  CHECK(check.winner_with == cex.winner_with);
  CHECK(check.winner_without == cex.winner_without);
}

TEST_CASE("search is deterministic under a fixed seed") {
  GeneratorConfig config;
  config.seed = 3;
  config.n_voters = 5;
  config.cycle_bias = 0.7;
  auto r1 = search_guru_violation(config, RuleKind::DepthFirst,
                                  VotingRule::Plurality, 1000);
  auto r2 = search_guru_violation(config, RuleKind::DepthFirst,
                                  VotingRule::Plurality, 1000);
  CHECK(r1.violated == r2.violated);
  CHECK(r1.samples_checked == r2.samples_checked);
  if (r1.counterexample) {
    REQUIRE(r2.counterexample);
    CHECK(r1.counterexample->joiner == r2.counterexample->joiner);
    CHECK(normalized(r1.counterexample->election) ==
          normalized(r2.counterexample->election));
  }
}

TEST_CASE("breadth-first search stays clean on a quick sample") {
  GeneratorConfig config;
  config.seed = 11;
  config.n_voters = 6;
  config.cycle_bias = 0.6;
  auto report = search_guru_violation(config, RuleKind::BreadthFirst,
                                      VotingRule::Plurality, 500);
  CHECK_FALSE(report.violated);
  CHECK(report.samples_checked == 500);
}
