#ifndef LIQD_TALLY_HPP
#define LIQD_TALLY_HPP

#include "liqd/rules.hpp"

namespace liqd {

enum class VotingRule { Plurality, Borda };

const char* to_string(VotingRule r);

struct TallyResult {
  std::map<AlternativeId, long> counts;
  std::optional<AlternativeId> winner;  // nullopt iff nobody voted
  VotingRule voting_rule = VotingRule::Plurality;
  long effective_voters = 0;  // ballots counted, direct plus delegated
};

/// Aggregate a resolved profile. Each casting voter's ballot counts
/// once for herself plus once per delegator assigned to her.
/// Plurality scores the top entry of each contributing ballot; Borda
/// awards |A|-1-pos points per ranked alternative and requires
/// complete ballots. Winner ties break lexicographically by id.
TallyResult tally(const ResolvedProfile& resolved, const Election& e,
                  VotingRule rule);

/// Full pipeline winner: resolve under `rule` and tally.
std::optional<AlternativeId> election_winner(const Election& e, RuleKind rule,
                                             VotingRule voting_rule);

}  // namespace liqd

#endif
