#include "liqd/tally.hpp"

#include <stdexcept>

namespace liqd {

const char* to_string(VotingRule r) {
  return r == VotingRule::Plurality ? "plurality" : "borda";
}

TallyResult tally(const ResolvedProfile& resolved, const Election& e,
                  VotingRule rule) {
  TallyResult result;
  result.voting_rule = rule;
  for (const auto& a : e.alternatives) result.counts[a] = 0;

  // Ballot multiplicities: the guru herself plus her delegators.
  std::map<VoterId, long> multiplicity;
  for (const auto& [voter, disp] : resolved.dispositions) {
    if (disp.kind == Disposition::Kind::CastsSelf) {
      multiplicity[voter] += 1;
    } else if (disp.kind == Disposition::Kind::DelegatesTo) {
      const Disposition& target = resolved.of(disp.guru);
      if (target.kind != Disposition::Kind::CastsSelf)
        throw std::invalid_argument("guru " + disp.guru + " of voter " + voter +
                                    " is not a casting voter");
      multiplicity[disp.guru] += 1;
    }
  }

  const long m = static_cast<long>(e.alternatives.size());
  for (const auto& [guru, count] : multiplicity) {
    const AlternativeRanking* ballot = e.ballot_of(guru);
    if (!ballot)
      throw std::invalid_argument("casting voter " + guru + " has no ballot");
    if (rule == VotingRule::Plurality) {
      result.counts[ballot->ranked.front()] += count;
    } else {
      if (static_cast<long>(ballot->ranked.size()) != m)
        throw std::invalid_argument("borda requires complete ballots; voter " +
                                    guru + " ranked " +
                                    std::to_string(ballot->ranked.size()) +
                                    " of " + std::to_string(m));
      for (std::size_t pos = 0; pos < ballot->ranked.size(); ++pos)
        result.counts[ballot->ranked[pos]] +=
            count * (m - 1 - static_cast<long>(pos));
    }
    result.effective_voters += count;
  }

  if (result.effective_voters > 0) {
    // counts is id-ordered, so the first maximum is the tie-break winner.
    for (const auto& [alt, score] : result.counts)
      if (!result.winner || score > result.counts[*result.winner])
        result.winner = alt;
  }
  return result;
}

std::optional<AlternativeId> election_winner(const Election& e, RuleKind rule,
                                             VotingRule voting_rule) {
  return tally(resolve(e, rule), e, voting_rule).winner;
}

}  // namespace liqd
