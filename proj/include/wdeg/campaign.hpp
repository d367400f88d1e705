#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wdeg/report.hpp"

namespace wdeg {

struct CampaignConfig {
  /// main, t34, su, twomax, jung or t43.
  std::string suite;
  std::uint64_t trials = 100;
  std::uint64_t seed = 0;
  /// Worker threads; 0 picks the hardware concurrency.
  std::size_t jobs = 0;
  /// Ring size override (suites pick their own range otherwise).
  std::optional<std::size_t> n;
  /// Degree bound for the random polynomial parts.
  std::optional<std::uint32_t> deg_bound;
};

enum class TrialStatus { kPassed, kFailed, kSkipped, kCapacity };

struct TrialOutcome {
  TrialStatus status = TrialStatus::kPassed;
  std::string message;
  Json evidence = Json::object();
  /// m computed by definition and through the initial form, compared.
  std::uint64_t m_checks = 0;
  std::uint64_t m_mismatches = 0;
};

struct CampaignResult {
  CampaignConfig config;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  std::uint64_t skipped = 0;
  std::uint64_t capacity_errors = 0;
  std::map<std::string, std::uint64_t> skip_reasons;
  std::uint64_t m_checks = 0;
  std::uint64_t m_mismatches = 0;
  /// {trial, seed, message, evidence} per failing trial, in trial order.
  Json failures = Json::array();
  /// Capacity errors are kept apart from failures.
  Json capacity = Json::array();
  /// The evidence record when trials == 1.
  std::optional<Json> record;
  double wall_time = 0;

  bool ok() const { return failed == 0 && m_mismatches == 0; }
  /// Deterministic given the config; wall time only when asked.
  Json to_json(bool with_wall_time = true) const;
};

const std::vector<std::string>& campaign_suites();

/// One trial, from its own seed.  Never throws for per-trial problems.
TrialOutcome run_trial(const CampaignConfig& config, std::uint64_t trial_seed);

/// InputError for an unknown suite, zero trials or a bad override.
CampaignResult run_campaign(const CampaignConfig& config);

}  // namespace wdeg
