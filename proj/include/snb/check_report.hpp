#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "snb/graded_algebra.hpp"

namespace snb {

struct CheckParams {
  std::uint64_t seed = 42;
  std::size_t samples = 100;  // per argument-parity pattern
  unsigned max_degree = 2;    // bosonic degree of sampled inputs
  std::size_t max_recorded_failures = 10;
};

struct Failure {
  std::string relation;
  std::vector<std::string> args;
  std::string lhs;
  std::string rhs;
};

/// Outcome of one randomized or exhaustive identity check. `asserted` is
/// false for exploratory probes whose failures are findings, not errors.
struct CheckReport {
  std::string suite;
  std::string spec;
  CheckParams params;
  std::size_t trials = 0;
  std::size_t failure_count = 0;
  bool asserted = true;
  std::vector<Failure> failures;
  nlohmann::json details = nlohmann::json::object();

  bool passed() const noexcept { return failure_count == 0; }
  /// failure_count counts failing trials; a trial may add several entries.
  void record(Failure f, bool new_trial = true);
  nlohmann::json to_json() const;
};

std::string render_text(const CheckReport& report);

/// lhs == rhs is the asserted relation.
struct Equation {
  std::string relation;
  Supernumber lhs;
  Supernumber rhs;
};

using TrialFn = std::function<std::vector<Equation>(std::span<const Supernumber> args, std::span<const int> parities)>;

/// Runs `fn` on random homogeneous argument tuples: every one of the 2^nargs
/// parity patterns (only the all-even one on purely bosonic spaces) gets
/// `params.samples` tuples, each drawn from its own derived seed.
CheckReport run_trials(std::string suite, std::string spec_name, const SpacePtr& space, std::size_t nargs,
                       const CheckParams& params, const TrialFn& fn);

/// Parity patterns a space can realise for `nargs` arguments.
std::vector<std::vector<int>> parity_patterns(const GradedSpace& space, std::size_t nargs);

std::vector<std::string> format_all(std::span<const Supernumber> values);

}  // namespace snb
