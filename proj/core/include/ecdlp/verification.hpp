#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ecdlp/analysis.hpp"

namespace ecdlp {

/// Outcome of one executable property suite.
struct SuiteResult {
  std::string name;
  bool passed = false;
  std::vector<std::string> lines;  // human-readable verdict table
  std::string report;              // optional CSV body (partitions)
};

// Chord law on the 19-point fixture: collinear triples of distinct points are
// exactly those summing to the identity.
SuiteResult verify_chord_law(std::uint64_t seed, std::size_t trials = 1000);

// Left kernel dimension l = 3n' and right kernel dimension for n' = 1..4.
SuiteResult verify_kernel_dim(std::uint64_t seed, std::size_t trials = 200);

// Closed-form partition count against brute force; discrepancies are
// reported, only oracle self-consistency can fail the suite.
SuiteResult verify_partitions();

// Exhaustive solver vs full-span enumeration, solver soundness, dominance,
// and a calibration report for the multiple-elimination solver.
SuiteResult verify_problem_l(std::uint64_t seed, std::size_t trials = 300);

inline constexpr std::string_view kSuiteNames[] = {"theorem1", "kernel-dim", "partitions", "problem-l", "all"};

// Throws ValidationError for an unknown suite name.
std::vector<SuiteResult> run_suites(std::string_view name, std::uint64_t seed);

// CSV (p,k,m,formula,oracle,match) for a partition audit.
std::string partition_audit_csv(const PartitionAudit& audit);

}  // namespace ecdlp
