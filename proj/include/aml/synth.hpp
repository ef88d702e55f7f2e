#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "aml/ingest.hpp"

namespace aml {

enum class GangPattern { kFanIn, kFanOut, kLayered };  // P1, P2, P1->P2 bridge

/// One injected laundering gang. A fan-in (P1) gang sends mule->hub
/// transfers in an early sub-window and hub->exit transfers after
/// phase_gap; fan-out (P2) mirrors it (feeder->hub then hub->mule);
/// layered chains a fan-in stage into a fan-out stage through single
/// hub->hub bridge transfers.
struct GangSpec {
  GangPattern pattern = GangPattern::kFanIn;
  int mule_count = 25;
  int hub_count = 3;
  double amount_scale = 5.0;
  std::int64_t time_spread = 21600;   // seconds of activity per phase
  std::int64_t phase_gap = 86400;     // seconds between phases

  int fan_count() const { return std::max(2, mule_count / 8); }  // exits / feeders
  int node_demand() const;
  void validate(const TimeWindow& window) const;
};

struct SynthConfig {
  std::uint64_t seed = 42;
  int background_nodes = 2000;
  double background_txn_rate = 2.0;  // mean transactions per node
  double amount_log_mean = 4.0;      // background amounts ~ lognormal, currency units
  double amount_log_sigma = 1.0;
  TimeWindow window{1700000000, 1700000000 + 7 * 86400};
  std::vector<GangSpec> gangs;

  /// The default dataset: three gangs (P1, P2, layered) on 2000 background
  /// nodes, seed 42.
  static SynthConfig standard();

  void validate() const;
};

struct SynthDataset {
  std::vector<TransactionRecord> records;
  std::vector<std::pair<std::string, int>> labels;  // account -> gang index
};

/// Deterministic generation: a fixed seed yields a byte-identical CSV.
/// Gang members are drawn from accounts that already have background
/// activity, so gangs embed in the main component; demand beyond the
/// background namespace is a ConfigError.
SynthDataset generate(const SynthConfig& config);

std::string dataset_csv(const SynthDataset& ds);
std::string labels_csv(const SynthDataset& ds);

}  // namespace aml
