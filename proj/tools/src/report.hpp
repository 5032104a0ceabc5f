#pragma once

#include <json.hpp>

#include "ecdlp/analysis.hpp"
#include "ecdlp/attack.hpp"
#include "ecdlp/experiment.hpp"

namespace ecdlp::cli {

nlohmann::ordered_json to_json(const ProbabilityModel& m);
nlohmann::ordered_json to_json(const IterationRecord& r);
nlohmann::ordered_json to_json(const TrialRecord& r, bool timing);
nlohmann::ordered_json to_json(const ExperimentSummary& s);

// Fixed-point text for report lines.
std::string fixed(double v, int digits = 4);

}  // namespace ecdlp::cli
