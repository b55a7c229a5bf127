#pragma once

#include <string>

#include "cdq/matching.hpp"
#include "cdq/model.hpp"
#include "cdq/schedule.hpp"

namespace cdq {

// PauliSum <-> JSON list of {"paulis": "IXYZ...", "re": r, "im": i}
std::string paulisum_to_json(const PauliSum& s);
PauliSum paulisum_from_json(const std::string& text);

// Instance file: {"kind": "two_level"} | {"kind":"ising_ring","N":n}
//              | {"kind":"maxcut","edges":[[i,j],...]}
std::string instance_to_json(const ProblemInstance& inst);
ProblemInstance instance_from_json(const std::string& text);

// Schedule file: {"T":t,"lambda":{"form":...},"s":{"form":...}}
std::string schedule_to_json(const Schedule& sched);
Schedule schedule_from_json(const std::string& text);

// MatchReport with angles, taus, errors, validity flags and provenance
std::string report_to_json(const MatchReport& rep, const std::string& config_digest,
                           unsigned seed);
// Angle CSV: header q,gamma,beta,tau,step_error
std::string angles_to_csv(const AngleSet& a);

// FNV-1a hash of a canonical config string, for self-describing outputs
std::string config_digest(const std::string& canonical);

}  // namespace cdq
