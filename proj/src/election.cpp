#include "liqd/election.hpp"

#include <algorithm>
#include <stdexcept>

namespace liqd {

std::vector<VoterId> Election::voters() const {
  std::set<VoterId> all(registered.begin(), registered.end());
  for (const auto& b : ballots) all.insert(b.owner);
  for (const auto& d : delegations) {
    all.insert(d.owner);
    all.insert(d.ranked.begin(), d.ranked.end());
  }
  return {all.begin(), all.end()};
}

const AlternativeRanking* Election::ballot_of(const VoterId& v) const {
  for (const auto& b : ballots)
    if (b.owner == v) return &b;
  return nullptr;
}

const VoterRanking* Election::delegation_of(const VoterId& v) const {
  for (const auto& d : delegations)
    if (d.owner == v) return &d;
  return nullptr;
}

namespace {

template <typename T>
bool has_duplicates(const std::vector<T>& xs) {
  std::set<T> seen(xs.begin(), xs.end());
  return seen.size() != xs.size();
}

}  // namespace

ValidationReport validate(const Election& e) {
  ValidationReport report;
  auto flag = [&](std::string msg) { report.violations.push_back(std::move(msg)); };

  if (has_duplicates(e.alternatives)) flag("duplicate alternative in alternative set");
  for (const auto& a : e.alternatives)
    if (a.empty()) flag("empty alternative id");
  for (const auto& v : e.registered)
    if (v.empty()) flag("empty voter id");

  std::set<AlternativeId> alts(e.alternatives.begin(), e.alternatives.end());

  std::set<VoterId> ballot_owners;
  for (const auto& b : e.ballots) {
    if (b.owner.empty()) flag("empty voter id");
    if (!ballot_owners.insert(b.owner).second)
      flag("duplicate ballot for voter " + b.owner);
    if (b.ranked.empty()) flag("empty ballot for voter " + b.owner);
    if (has_duplicates(b.ranked))
      flag("duplicate entry in ranking of voter " + b.owner);
    for (const auto& a : b.ranked)
      if (!alts.count(a))
        flag("unknown alternative " + a + " in ballot of voter " + b.owner);
  }

  std::set<VoterId> delegation_owners;
  for (const auto& d : e.delegations) {
    if (d.owner.empty()) flag("empty voter id");
    if (!delegation_owners.insert(d.owner).second)
      flag("duplicate delegation ranking for voter " + d.owner);
    if (d.ranked.empty()) flag("empty delegation ranking for voter " + d.owner);
    if (has_duplicates(d.ranked))
      flag("duplicate entry in ranking of voter " + d.owner);
    if (std::find(d.ranked.begin(), d.ranked.end(), d.owner) != d.ranked.end())
      flag("self-delegation by voter " + d.owner);
    for (const auto& v : d.ranked)
      if (v.empty()) flag("empty voter id in ranking of voter " + d.owner);
  }

  return report;
}

ElectoratePartition classify(const Election& e, std::vector<std::string>* warnings) {
  ElectoratePartition part;
  for (const auto& v : e.voters()) {
    if (e.ballot_of(v)) {
      part.casting.insert(v);
      if (e.delegation_of(v) && warnings)
        warnings->push_back("voter " + v +
                            " has both a ballot and a delegation ranking; "
                            "classified casting");
    } else if (e.delegation_of(v)) {
      part.delegating.insert(v);
    } else {
      part.abstaining.insert(v);
    }
  }
  return part;
}

Election normalized(const Election& e) {
  Election out = e;
  out.registered = e.voters();
  auto by_owner = [](const auto& a, const auto& b) { return a.owner < b.owner; };
  std::sort(out.ballots.begin(), out.ballots.end(), by_owner);
  std::sort(out.delegations.begin(), out.delegations.end(), by_owner);
  return out;
}

Election without_ballot(const Election& e, const VoterId& i) {
  if (!e.ballot_of(i))
    throw std::invalid_argument("voter " + i + " has no ballot to remove");
  Election out = e;
  std::erase_if(out.ballots, [&](const auto& b) { return b.owner == i; });
  // Keep i in the electorate even if nothing else mentions her.
  if (std::find(out.registered.begin(), out.registered.end(), i) == out.registered.end())
    out.registered.push_back(i);
  return out;
}

Election with_ballot(const Election& e, AlternativeRanking ballot) {
  if (e.ballot_of(ballot.owner))
    throw std::invalid_argument("voter " + ballot.owner + " already has a ballot");
  Election out = e;
  out.ballots.push_back(std::move(ballot));
  return out;
}

Election without_delegation(const Election& e, const VoterId& j) {
  if (!e.delegation_of(j))
    throw std::invalid_argument("voter " + j + " has no delegation ranking to remove");
  Election out = e;
  std::erase_if(out.delegations, [&](const auto& d) { return d.owner == j; });
  if (std::find(out.registered.begin(), out.registered.end(), j) == out.registered.end())
    out.registered.push_back(j);
  return out;
}

Election with_delegation(const Election& e, VoterRanking ranking) {
  if (e.delegation_of(ranking.owner))
    throw std::invalid_argument("voter " + ranking.owner +
                                " already has a delegation ranking");
  Election out = e;
  out.delegations.push_back(std::move(ranking));
  return out;
}

}  // namespace liqd
