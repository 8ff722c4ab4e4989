#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "icover/graph.hpp"

namespace icover {

/// Ground-truth decomposability by exhaustive subset enumeration against the
/// raw interval definition. Deliberately independent of the closure-based
/// decision procedure it is used to validate. Capped at 16 vertices.
bool oracle_indecomposable(const Graph& g);

/// Minimum vertex-cover size by exhaustive search over subsets of increasing
/// size, again straight from the definition. Capped at 16 vertices.
int oracle_min_cover_size(const Graph& ig);

enum class RunMode { Exhaustive, Sampled };

struct RunParams {
  int n = -1;  // -1: use the statement's default size list
  std::optional<RunMode> mode;
  std::uint64_t seed = 1;
  long count = -1;  // -1: statement default
  int jobs = 1;
};

struct Mismatch {
  long index = 0;
  std::string graph;  // edge-list text, replayable through the cli parser
  std::string expected;
  std::string observed;
};

struct VerificationReport {
  std::string statement_id;
  std::vector<int> sizes;
  RunMode mode = RunMode::Exhaustive;
  std::uint64_t seed = 0;
  long count = 0;
  long instances_checked = 0;
  std::vector<Mismatch> mismatches;  // capped; see details["mismatch_total"]
  std::vector<std::pair<std::string, long>> details;
  std::chrono::milliseconds elapsed{0};
  bool pass() const { return mismatches.empty(); }
};

struct StatementInfo {
  std::string id;
  std::string claim;  // the checked claim, in plain language
  RunMode default_mode;
  std::vector<int> default_sizes;
  long default_count;
};

const std::vector<StatementInfo>& statement_registry();
const StatementInfo* find_statement(const std::string& id);

/// Runs one registered statement over its instance space (exhaustive or
/// seeded-sampled), evaluating both sides of the claimed equivalence or
/// implication with library primitives plus the definitional oracles, and
/// records every disagreement.
VerificationReport run_statement(const std::string& id, const RunParams& params);

}  // namespace icover
