#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "aml/graph.hpp"

namespace aml {

struct RiskConfig {
  int bin_count = 10;
  std::array<double, 5> metric_ratios{0.2, 0.2, 0.2, 0.2, 0.2};  // V, E, M, D, H
  std::array<double, 3> percentile_cuts{95.0, 90.0, 80.0};
  int mcs_level_min = 1;     // communities at or better than...
  int level_threshold = 2;   // ...this level flag the MCS as suspicious
  double exponent_clamp = 30.0;

  void validate() const;
};

struct CommunityMetrics {
  int community = -1;
  NodeId mcs_id = kNoNode;
  std::int64_t node_count = 0;     // V
  std::int64_t edge_count = 0;     // E, intra-community merged edges
  std::int64_t money_minor = 0;    // M
  double avg_degree = 0.0;         // 2E / V over intra-community edges
  double entropy = 0.0;            // H, bits
  std::vector<NodeId> members;

  double money_units() const { return static_cast<double>(money_minor) / 100.0; }
};

struct ScoredCommunity {
  CommunityMetrics metrics;
  std::array<double, 5> standardized{};  // V, E, M, D, H
  double psi = 1.0;
  int level = 0;  // 1..3, or 0 for none
};

struct McsSummary {
  NodeId mcs_id = kNoNode;
  std::int64_t node_count = 0;
  std::int64_t edge_count = 0;
  std::int64_t hub_count = 0;
  int communities = 0;
  std::array<int, 3> level_counts{0, 0, 0};
  bool suspicious = false;
};

struct RiskReport {
  std::vector<ScoredCommunity> communities;  // descending psi
  std::vector<McsSummary> mcs;               // ascending mcs_id
};

/// Shannon entropy in bits over equal-width bins of |t - mean(t)|,
/// [0, max deviation] split into bin_count bins. Binning runs in exact
/// integer arithmetic, so the result is invariant under permutation and
/// uniform translation of the timestamps. All-equal timestamps give 0.
/// Throws ConfigError on empty input or bin_count < 1.
double temporal_entropy(const std::vector<std::int64_t>& times, int bin_count);

/// Per-community V / E / M / avg degree / entropy over intra-community
/// edges only; entropy uses the raw transaction timestamps of
/// intra-community transfers. `assignment` maps dense node id ->
/// community (kNoNode/-1 for nodes outside the detected graph);
/// `components` maps dense node id -> mcs id. Communities are returned in
/// ascending community id.
std::vector<CommunityMetrics> community_metrics(const TransactionGraph& g,
                                                const std::vector<int>& assignment,
                                                const std::vector<NodeId>& components,
                                                const std::vector<TransactionRecord>& records,
                                                int bin_count);

/// Standardizes the five metrics across communities and scores
/// psi = exp(clamp(sum_i ratio_i * standardized_i)). Result sorted by
/// descending psi, ties by ascending community id.
std::vector<ScoredCommunity> risk_scores(const std::vector<CommunityMetrics>& metrics,
                                         const RiskConfig& cfg);

/// Percentile levels by ceiling rank: with cuts {95, 90, 80} the top 5%
/// are level 1, next 5% level 2, next 10% level 3, rest none. Scores tied
/// across a boundary share the better level. Also fills the per-MCS
/// summaries and suspicious flags.
RiskReport assign_levels(std::vector<ScoredCommunity> scored, const std::vector<McsInfo>& mcs_infos,
                         const RiskConfig& cfg);

}  // namespace aml
