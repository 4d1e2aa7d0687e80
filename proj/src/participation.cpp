#include "liqd/participation.hpp"

#include <algorithm>
#include <stdexcept>

namespace liqd {

bool strictly_prefers(const Election& e, const VoterId& voter,
                      const std::optional<AlternativeId>& a,
                      const std::optional<AlternativeId>& b) {
  if (!a || !b || *a == *b) return false;
  const AlternativeRanking* ballot = e.ballot_of(voter);
  if (!ballot) return false;
  auto pos_a = std::find(ballot->ranked.begin(), ballot->ranked.end(), *a);
  auto pos_b = std::find(ballot->ranked.begin(), ballot->ranked.end(), *b);
  if (pos_a == ballot->ranked.end() || pos_b == ballot->ranked.end())
    return false;
  return pos_a < pos_b;
}

GuruCheck check_guru_instance(const Election& e, RuleKind rule,
                              VotingRule voting_rule, const VoterId& joiner) {
  ResolvedProfile full = resolve(e, rule);
  const Disposition& disp = full.of(joiner);
  if (disp.kind != Disposition::Kind::DelegatesTo)
    throw std::invalid_argument("voter " + joiner +
                                " is not assigned a guru under this rule");

  GuruCheck check;
  check.guru = disp.guru;
  check.winner_with = tally(full, e, voting_rule).winner;

  Election reduced = without_delegation(e, joiner);
  check.winner_without = election_winner(reduced, rule, voting_rule);

  check.verdict =
      strictly_prefers(e, check.guru, check.winner_without, check.winner_with)
          ? Verdict::Violated
          : Verdict::Holds;
  return check;
}

CastCheck check_cast_instance(const Election& e, RuleKind rule,
                              VotingRule voting_rule, const VoterId& caster) {
  if (!e.ballot_of(caster))
    throw std::invalid_argument("voter " + caster + " is not casting");

  CastCheck check;
  check.winner_with = election_winner(e, rule, voting_rule);
  check.winner_without =
      election_winner(without_ballot(e, caster), rule, voting_rule);
  check.verdict =
      strictly_prefers(e, caster, check.winner_without, check.winner_with)
          ? Verdict::Violated
          : Verdict::Holds;
  return check;
}

bool check_single_guru_delta(const ResolvedProfile& before,
                             const ResolvedProfile& after,
                             const VoterId& joiner) {
  const Disposition& joined = after.of(joiner);
  const bool has_guru = joined.kind == Disposition::Kind::DelegatesTo;

  for (const auto& [voter, disp_after] : after.dispositions) {
    if (voter == joiner) continue;
    const Disposition& disp_before = before.of(voter);
    if (disp_before.kind == disp_after.kind &&
        (disp_after.kind != Disposition::Kind::DelegatesTo ||
         disp_before.guru == disp_after.guru))
      continue;
    if (has_guru && disp_after.kind == Disposition::Kind::DelegatesTo &&
        disp_after.guru == joined.guru)
      continue;
    return false;
  }
  return true;
}

namespace {

ParticipationReport search_violation(Axiom axiom, const GeneratorConfig& config,
                                     RuleKind rule, VotingRule voting_rule,
                                     long budget) {
  ParticipationReport report;
  report.axiom = axiom;
  report.rule = rule;
  report.voting_rule = voting_rule;

  GeneratorConfig draw = config;
  for (long s = 0; s < budget; ++s) {
    draw.seed = config.seed + static_cast<std::uint64_t>(s);
    Election e = generate(draw);
    ++report.samples_checked;

    auto part = classify(e);
    ResolvedProfile resolved = resolve(e, rule);

    if (axiom == Axiom::Guru) {
      for (const auto& j : part.delegating) {
        if (resolved.of(j).kind != Disposition::Kind::DelegatesTo) continue;
        GuruCheck check = check_guru_instance(e, rule, voting_rule, j);
        if (check.verdict == Verdict::Violated) {
          report.violated = true;
          report.counterexample = Counterexample{
              e, j, check.guru, check.winner_with, check.winner_without};
          return report;
        }
      }
    } else {
      for (const auto& i : part.casting) {
        CastCheck check = check_cast_instance(e, rule, voting_rule, i);
        if (check.verdict == Verdict::Violated) {
          report.violated = true;
          report.counterexample =
              Counterexample{e, i, i, check.winner_with, check.winner_without};
          return report;
        }
      }
    }
  }
  return report;
}

}  // namespace

ParticipationReport search_guru_violation(const GeneratorConfig& config,
                                          RuleKind rule, VotingRule voting_rule,
                                          long budget) {
  return search_violation(Axiom::Guru, config, rule, voting_rule, budget);
}

ParticipationReport search_cast_violation(const GeneratorConfig& config,
                                          RuleKind rule, VotingRule voting_rule,
                                          long budget) {
  return search_violation(Axiom::Cast, config, rule, voting_rule, budget);
}

}  // namespace liqd
