#ifndef LIQD_RULES_HPP
#define LIQD_RULES_HPP

#include <map>
#include <optional>

#include "liqd/chains.hpp"

namespace liqd {

enum class RuleKind { DepthFirst, BreadthFirst };

const char* to_string(RuleKind r);

/// A voter's final state after delegation resolution. For DelegatesTo
/// the minimal chain that produced the assignment is recorded; the
/// participation checks and audit output reason about it.
struct Disposition {
  enum class Kind { CastsSelf, DelegatesTo, Abstains };
  Kind kind = Kind::Abstains;
  VoterId guru;           // meaningful iff kind == DelegatesTo
  DelegationChain chain;  // meaningful iff kind == DelegatesTo

  static Disposition casts_self() { return {Kind::CastsSelf, {}, {}}; }
  static Disposition abstains() { return {Kind::Abstains, {}, {}}; }
  static Disposition delegates_to(DelegationChain c);

  bool operator==(const Disposition&) const = default;
};

/// The resolved profile: one disposition per voter.
struct ResolvedProfile {
  std::map<VoterId, Disposition> dispositions;

  const Disposition& of(const VoterId& v) const;

  /// The guru voting on behalf of `v`: v herself when casting, her
  /// assigned guru when delegating, nullopt when abstaining.
  std::optional<VoterId> effective_guru(const VoterId& v) const;
};

/// Apply a delegation rule: every casting voter keeps her ballot,
/// every delegating voter is assigned the guru of her minimal chain
/// (lexicographic weight order for DepthFirst, length-then-weight
/// order for BreadthFirst) or abstains when no chain exists.
ResolvedProfile resolve(const Election& e, const DelegationGraph& g,
                        const ElectoratePartition& part, RuleKind rule);

/// Convenience pipeline: validate, classify, build the graph, resolve.
/// Throws std::invalid_argument when validation fails.
ResolvedProfile resolve(const Election& e, RuleKind rule);

}  // namespace liqd

#endif
