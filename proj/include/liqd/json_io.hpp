#ifndef LIQD_JSON_IO_HPP
#define LIQD_JSON_IO_HPP

#include <nlohmann/json_fwd.hpp>

#include "liqd/participation.hpp"

namespace liqd {

/// Parse the documented election schema:
///   {"alternatives": ["Yes", ...],
///    "voters": [{"id": "p", "ballot": [...]?, "delegates_to": [...]?}, ...]}
/// A voter object with neither optional key is an explicit abstainer.
/// Unknown keys are rejected with std::runtime_error.
Election election_from_json(const nlohmann::json& doc);
nlohmann::json election_to_json(const Election& e);

/// Read an election from a file path, or standard input when the
/// path is "-". Throws std::runtime_error on I/O or schema errors.
Election load_election(const std::string& path);

nlohmann::json resolution_to_json(const ResolvedProfile& resolved,
                                  bool emit_chains);
nlohmann::json tally_to_json(const TallyResult& result);
nlohmann::json report_to_json(const ParticipationReport& report);

}  // namespace liqd

#endif
