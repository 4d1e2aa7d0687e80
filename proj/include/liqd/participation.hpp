#ifndef LIQD_PARTICIPATION_HPP
#define LIQD_PARTICIPATION_HPP

#include "liqd/generator.hpp"
#include "liqd/tally.hpp"

namespace liqd {

enum class Axiom { Cast, Guru };
enum class Verdict { Holds, Violated };

/// Does `voter`'s ballot strictly rank `a` above `b`? False whenever
/// either outcome is empty or unranked: we never infer preferences a
/// voter did not state, and a no-winner outcome is weakly worst.
bool strictly_prefers(const Election& e, const VoterId& voter,
                      const std::optional<AlternativeId>& a,
                      const std::optional<AlternativeId>& b);

struct GuruCheck {
  VoterId guru;  // the joiner's assigned guru in the full election
  Verdict verdict = Verdict::Holds;
  std::optional<AlternativeId> winner_with;
  std::optional<AlternativeId> winner_without;
};

/// Guru participation, one instance: compare the election winner with
/// and without `joiner`'s delegation through the eyes of the guru the
/// full election assigns to `joiner`. Violated iff the guru strictly
/// prefers the without-outcome. Throws when `joiner` has no guru.
GuruCheck check_guru_instance(const Election& e, RuleKind rule,
                              VotingRule voting_rule, const VoterId& joiner);

struct CastCheck {
  Verdict verdict = Verdict::Holds;
  std::optional<AlternativeId> winner_with;
  std::optional<AlternativeId> winner_without;
};

/// Cast participation, one instance: is `caster` weakly better off
/// submitting her ballot than withdrawing it?
CastCheck check_cast_instance(const Election& e, RuleKind rule,
                              VotingRule voting_rule, const VoterId& caster);

/// Structural premise behind the acyclic and breadth-first
/// guarantees: after `joiner` starts delegating, every other voter
/// either keeps her disposition or is newly assigned joiner's guru.
bool check_single_guru_delta(const ResolvedProfile& before,
                             const ResolvedProfile& after,
                             const VoterId& joiner);

struct Counterexample {
  Election election;
  VoterId joiner;
  VoterId guru;
  std::optional<AlternativeId> winner_with;
  std::optional<AlternativeId> winner_without;
};

struct ParticipationReport {
  Axiom axiom = Axiom::Guru;
  RuleKind rule = RuleKind::DepthFirst;
  VotingRule voting_rule = VotingRule::Plurality;
  bool violated = false;  // false means "holds on the checked sample"
  long samples_checked = 0;
  std::optional<Counterexample> counterexample;
};

/// Sample elections from the generator (seed, seed+1, ...) and check
/// guru participation for every delegator that gets a guru. Stops at
/// the first violation; a clean run is a Holds-on-sample verdict,
/// never a proof.
ParticipationReport search_guru_violation(const GeneratorConfig& config,
                                          RuleKind rule, VotingRule voting_rule,
                                          long budget);

/// Same search for cast participation over every casting voter.
ParticipationReport search_cast_violation(const GeneratorConfig& config,
                                          RuleKind rule, VotingRule voting_rule,
                                          long budget);

}  // namespace liqd

#endif
