#include "report.hpp"

#include <iomanip>
#include <sstream>

namespace ecdlp::cli {

using nlohmann::ordered_json;

std::string fixed(double v, int digits) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << v;
  return os.str();
}

ordered_json to_json(const ProbabilityModel& m) {
  return {{"p", m.p},
          {"nprime", m.n_prime},
          {"l", m.l},
          {"subsets", m.subsets},
          {"per_iteration", m.per_iteration},
          {"alg2_conditional", m.alg2_conditional},
          {"overall", m.overall},
          {"headline_ln", m.headline_ln},
          {"headline_log2", m.headline_log2}};
}

ordered_json to_json(const IterationRecord& r) {
  ordered_json j{{"iteration", r.index},
                 {"kernel_dim", r.kernel_dim},
                 {"repeated_rows", r.repeated_rows}};
  if (r.accident) {
    j["accident"] = {{"r", r.accident->r},
                     {"r_prime", r.accident->r_prime},
                     {"row_collision", r.accident->row_collision},
                     {"m", r.accident->m}};
  } else {
    j["accident"] = nullptr;
  }
  j["solver_found"] = r.solver_found;
  j["candidates"] = r.candidates;
  j["alg2_checkpoint"] = r.alg2_checkpoint;
  ordered_json rejects = ordered_json::object();
  for (std::size_t i = 0; i < kRejectReasonCount; ++i)
    if (r.rejects[i]) rejects[std::string(to_string(static_cast<RejectReason>(i)))] = r.rejects[i];
  j["rejects"] = rejects;
  j["reject_reason"] = to_string(r.first_reject);
  j["route"] = to_string(r.route);
  j["m"] = r.m ? ordered_json(*r.m) : ordered_json(nullptr);
  return j;
}

ordered_json to_json(const TrialRecord& r, bool timing) {
  ordered_json j{{"trial", r.trial},
                 {"m", r.m},
                 {"success", r.success},
                 {"kernel_dim", r.kernel_dim},
                 {"solver_found", r.solver_found},
                 {"reject_reason", to_string(r.reason)},
                 {"route", to_string(r.route)}};
  if (timing) j["elapsed_us"] = r.elapsed_us;
  return j;
}

ordered_json to_json(const ExperimentSummary& s) {
  return {{"trials", s.trials},
          {"successes", s.successes},
          {"accidents", s.accidents},
          {"rate", s.rate},
          {"ci95", {s.ci95.low, s.ci95.high}},
          {"model", to_json(s.model)}};
}

}  // namespace ecdlp::cli
