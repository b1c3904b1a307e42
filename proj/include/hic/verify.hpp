#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "hic/graph.hpp"
#include "hic/json.hpp"

namespace hic {

class VerifyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SuiteConfig {
  std::string suite;
  /// Random suites draw this many graphs. Enumerated suites (paths, wheels,
  /// remark-supports, synth-roundtrip, golden) ignore it.
  std::size_t trials = 100;
  std::size_t max_n = 9;
  unsigned r_max = 3;
  std::uint64_t seed = 1;
  std::size_t max_faces = 2'000'000;
  std::size_t max_nodes = 1'000'000;
};

/// Vacuous trials count as passed and are also tallied in `vacuous`.
struct SuiteReport {
  std::string suite;
  SuiteConfig config;
  std::size_t run = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
  std::size_t vacuous = 0;
  /// One self-contained bundle per failed trial; see replay_bundle.
  std::vector<Json> counterexamples;
  /// {"trial":i,"reason":"..."} per skipped trial.
  std::vector<Json> skips;

  double vacuous_fraction() const;
  /// No failures and no trial that exercised a non-vacuous hypothesis.
  bool inconclusive() const;
  bool ok() const { return failed == 0 && !inconclusive(); }
};

const std::vector<std::string>& suite_names();

/// Throws VerifyError on an unknown suite or invalid config.
SuiteReport run_suite(const SuiteConfig& config);
/// The fixed worked examples.
SuiteReport golden_report();

/// Re-evaluates the trial stored in a counterexample bundle. Only the budget
/// fields of `budgets` are used.
SuiteReport replay_bundle(const Json& bundle, const SuiteConfig& budgets = {});

/// Field order is fixed and no timing is recorded, so equal inputs give
/// byte-identical dumps.
Json to_json(const SuiteReport& report);

/// Every connected graph on 1..max_n vertices, one per isomorphism class,
/// ordered by size then by canonical code. max_n <= 8.
std::vector<Graph> connected_graph_classes(std::size_t max_n);

}  // namespace hic
