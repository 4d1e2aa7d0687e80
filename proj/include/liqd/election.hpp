#ifndef LIQD_ELECTION_HPP
#define LIQD_ELECTION_HPP

#include <set>
#include <string>
#include <vector>

namespace liqd {

using VoterId = std::string;
using AlternativeId = std::string;

/// A voter's strict ranking over alternatives, most preferred first.
struct AlternativeRanking {
  VoterId owner;
  std::vector<AlternativeId> ranked;

  bool operator==(const AlternativeRanking&) const = default;
};

/// A voter's strict ranking over other voters she is willing to
/// delegate to, most preferred first. Position m (1-based) is the
/// rank used as the edge weight in the delegation graph.
struct VoterRanking {
  VoterId owner;
  std::vector<VoterId> ranked;

  bool operator==(const VoterRanking&) const = default;
};

/// Raw election input: the alternatives, every submitted ballot and
/// delegation ranking, and any voters registered without either
/// (explicit abstainers). The full voter set is the union of the
/// registered list and every voter mentioned anywhere.
struct Election {
  std::vector<AlternativeId> alternatives;
  std::vector<AlternativeRanking> ballots;
  std::vector<VoterRanking> delegations;
  std::vector<VoterId> registered;

  /// All voters: registered plus everyone mentioned in a ballot
  /// owner slot or a delegation ranking. Sorted, duplicate-free.
  std::vector<VoterId> voters() const;

  const AlternativeRanking* ballot_of(const VoterId& v) const;
  const VoterRanking* delegation_of(const VoterId& v) const;

  bool operator==(const Election&) const = default;
};

/// The V^c / V^d / V^a split of the electorate.
struct ElectoratePartition {
  std::set<VoterId> casting;
  std::set<VoterId> delegating;
  std::set<VoterId> abstaining;

  bool operator==(const ElectoratePartition&) const = default;
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Structural validation: duplicate records, duplicate ranking
/// entries, self-delegation, unknown alternatives, empty ids.
ValidationReport validate(const Election& e);

/// Classify every voter into exactly one electorate. A voter holding
/// both a ballot and a delegation ranking is classified casting (the
/// ballot takes precedence); such dual records are reported through
/// `warnings` when given.
ElectoratePartition classify(const Election& e,
                             std::vector<std::string>* warnings = nullptr);

/// Canonical form for comparisons: records sorted by owner, the
/// registered list reduced to the full sorted voter set.
Election normalized(const Election& e);

// Profile edits. Each returns a fresh election; the input is never
// modified. Preconditions are enforced with std::invalid_argument.
Election without_ballot(const Election& e, const VoterId& i);
Election with_ballot(const Election& e, AlternativeRanking ballot);
Election without_delegation(const Election& e, const VoterId& j);
Election with_delegation(const Election& e, VoterRanking ranking);

}  // namespace liqd

#endif
