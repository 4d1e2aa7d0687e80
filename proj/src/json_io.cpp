#include "liqd/json_io.hpp"

#include <fstream>
#include <iostream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace liqd {

using nlohmann::json;

namespace {

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> allowed,
                         const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    (void)value;
    bool known = false;
    for (const char* k : allowed)
      if (key == k) known = true;
    if (!known)
      throw std::runtime_error("unknown key \"" + key + "\" in " + where);
  }
}

std::vector<std::string> string_list(const json& arr, const std::string& where) {
  if (!arr.is_array()) throw std::runtime_error(where + " must be an array");
  std::vector<std::string> out;
  for (const auto& item : arr) {
    if (!item.is_string())
      throw std::runtime_error(where + " entries must be strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

}  // namespace

Election election_from_json(const json& doc) {
  if (!doc.is_object()) throw std::runtime_error("election must be an object");
  reject_unknown_keys(doc, {"alternatives", "voters"}, "election");
  if (!doc.contains("alternatives") || !doc.contains("voters"))
    throw std::runtime_error("election needs \"alternatives\" and \"voters\"");

  Election e;
  e.alternatives = string_list(doc["alternatives"], "\"alternatives\"");

  if (!doc["voters"].is_array())
    throw std::runtime_error("\"voters\" must be an array");
  for (const auto& voter : doc["voters"]) {
    if (!voter.is_object())
      throw std::runtime_error("voter entries must be objects");
    reject_unknown_keys(voter, {"id", "ballot", "delegates_to"}, "voter entry");
    if (!voter.contains("id") || !voter["id"].is_string())
      throw std::runtime_error("voter entry needs a string \"id\"");
    VoterId id = voter["id"].get<std::string>();
    e.registered.push_back(id);
    if (voter.contains("ballot"))
      e.ballots.push_back({id, string_list(voter["ballot"], "\"ballot\"")});
    if (voter.contains("delegates_to"))
      e.delegations.push_back(
          {id, string_list(voter["delegates_to"], "\"delegates_to\"")});
  }
  return e;
}

json election_to_json(const Election& e) {
  json voters = json::array();
  for (const auto& v : e.voters()) {
    json entry{{"id", v}};
    if (const auto* b = e.ballot_of(v)) entry["ballot"] = b->ranked;
    if (const auto* d = e.delegation_of(v)) entry["delegates_to"] = d->ranked;
    voters.push_back(std::move(entry));
  }
  return json{{"alternatives", e.alternatives}, {"voters", voters}};
}

Election load_election(const std::string& path) {
  json doc;
  try {
    if (path == "-") {
      doc = json::parse(std::cin);
    } else {
      std::ifstream in(path);
      if (!in) throw std::runtime_error("cannot open " + path);
      doc = json::parse(in);
    }
  } catch (const json::parse_error& err) {
    throw std::runtime_error("invalid JSON in " + path + ": " + err.what());
  }
  return election_from_json(doc);
}

json resolution_to_json(const ResolvedProfile& resolved, bool emit_chains) {
  json out = json::array();
  for (const auto& [voter, disp] : resolved.dispositions) {
    json entry{{"voter", voter}};
    switch (disp.kind) {
      case Disposition::Kind::CastsSelf:
        entry["disposition"] = "casts";
        break;
      case Disposition::Kind::Abstains:
        entry["disposition"] = "abstains";
        break;
      case Disposition::Kind::DelegatesTo:
        entry["disposition"] = "delegates";
        entry["guru"] = disp.guru;
        if (emit_chains) entry["chain"] = disp.chain.nodes;
        break;
    }
    out.push_back(std::move(entry));
  }
  return out;
}

json tally_to_json(const TallyResult& result) {
  json counts = json::object();
  for (const auto& [alt, score] : result.counts) counts[alt] = score;
  return json{{"voting_rule", to_string(result.voting_rule)},
              {"counts", counts},
              {"winner", result.winner ? json(*result.winner) : json(nullptr)},
              {"effective_voters", result.effective_voters}};
}

json report_to_json(const ParticipationReport& report) {
  json out{{"axiom", report.axiom == Axiom::Guru ? "guru" : "cast"},
           {"rule", to_string(report.rule)},
           {"voting_rule", to_string(report.voting_rule)},
           {"verdict", report.violated ? "violated" : "holds-on-sample"},
           {"samples_checked", report.samples_checked}};
  if (report.counterexample) {
    const Counterexample& cex = *report.counterexample;
    out["counterexample"] = {
        {"election", election_to_json(cex.election)},
        {"joiner", cex.joiner},
        {"guru", cex.guru},
        {"winner_with", cex.winner_with ? json(*cex.winner_with) : json(nullptr)},
        {"winner_without",
         cex.winner_without ? json(*cex.winner_without) : json(nullptr)}};
  }
  return out;
}

}  // namespace liqd
