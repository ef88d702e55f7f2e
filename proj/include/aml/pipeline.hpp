#pragma once

#include <optional>
#include <string>
#include <vector>

#include "aml/graph.hpp"
#include "aml/log.hpp"
#include "aml/louvain.hpp"
#include "aml/risk.hpp"
#include "aml/weighting.hpp"

namespace aml {

struct LouvainConfig {
  std::string mode = "parallel";  // "serial" | "parallel"
  double epsilon_q = 1e-7;
  int max_levels = 20;
  int max_rounds = 100;

  LouvainOptions options(int workers) const;
  void validate() const;
};

/// Everything a run needs; loadable from JSON, every field mirrored by a
/// CLI flag (flags win). Defaults are the documented operating point.
struct PipelineConfig {
  TimeWindow window{0, 0};  // 0/0 means "span of the input data"
  WeightConfig weights;
  FilterThresholds filter;
  bool iterate_prune = false;
  LouvainConfig louvain;
  RiskConfig risk;
  int workers = 1;
  std::uint64_t seed = 42;

  void validate() const;
  static PipelineConfig from_json_text(const std::string& text);
  static PipelineConfig from_json_file(const std::string& path);
  std::string to_json_text() const;
};

/// Post-prune graph plus everything downstream stages need: components,
/// per-MCS info with kept flags, final edge weights on the kept subgraph,
/// and the window-filtered raw records (community entropy needs their
/// timestamps). Serialized as versioned JSON, byte-stable for identical
/// input.
struct GraphSnapshot {
  TransactionGraph graph;             // post-prune, pre-MCS-filter
  std::vector<NodeId> components;     // dense id -> mcs id
  std::vector<McsInfo> mcs_infos;
  std::vector<TransactionRecord> records;
  // Funnel counters for the run log.
  std::int64_t raw_rows = 0;
  std::int64_t malformed_rows = 0;
  std::int64_t window_records = 0;
  std::int64_t merged_edges = 0;
  std::int64_t pre_prune_nodes = 0;

  std::string to_json_text() const;
  static GraphSnapshot from_json_text(const std::string& text);
  static GraphSnapshot from_json_file(const std::string& path);

  /// The kept subgraph (nodes/edges of kept MCSs; stats shared).
  TransactionGraph kept_graph() const;
};

/// ingest + graph + weighting: parse, merge, primitive weights, build,
/// prune, components, MCS filter, then node/temporal corrections on the
/// kept subgraph (weights stored back onto the snapshot's kept edges).
GraphSnapshot ingest_stage(const std::string& input_csv_path, const PipelineConfig& cfg, Log& log);
GraphSnapshot ingest_stage_text(const std::string& csv_text, const PipelineConfig& cfg, Log& log);

struct DetectResult {
  std::vector<int> assignment;        // dense node id -> community (-1 outside)
  LouvainResult louvain;              // over the detection graph
  std::vector<NodeId> detect_nodes;   // louvain index -> dense node id
};

/// Louvain over the union of kept MCSs (communities cannot span MCSs since
/// no edges cross them).
DetectResult detect_stage(const GraphSnapshot& snap, const PipelineConfig& cfg, Log& log);

struct PipelineResult {
  RiskReport report;
  DetectResult detection;
  GraphSnapshot snapshot;
  std::string report_json;  // canonical serialized report (byte-stable)
};

/// risk metrics + scores + levels + MCS summaries.
RiskReport score_stage(const GraphSnapshot& snap, const std::vector<int>& assignment,
                       const PipelineConfig& cfg, Log& log);

PipelineResult run_pipeline(const std::string& input_csv_path, const PipelineConfig& cfg, Log& log);
PipelineResult run_pipeline_text(const std::string& csv_text, const PipelineConfig& cfg, Log& log);

/// Canonical JSON for the final report (communities descending by psi,
/// MCS summaries ascending, config echo, funnel, advisory knee).
std::string report_json(const RiskReport& report, const GraphSnapshot& snap,
                        const DetectResult& det, const PipelineConfig& cfg);
std::string report_csv(const RiskReport& report, const NodeTable& names);

/// Assignment export: node,community,level_trace.
std::string assignment_csv(const DetectResult& det, const NodeTable& names);
void parse_assignment_csv(const std::string& text, const NodeTable& names,
                          std::vector<int>& assignment);

/// DOT export colored by community (mirrors the usual rendering of
/// detected communities).
std::string communities_dot(const GraphSnapshot& snap, const std::vector<int>& assignment);

// ---------------------------------------------------------------------------
// Threshold suggestion curves

struct ThresholdCurve {
  std::string name;                 // "scale", "degree", "hub_count"
  std::vector<double> thresholds;   // sampled grid
  std::vector<double> v_remain;     // remaining vertices (scale/degree sweeps)
  std::vector<double> m_remain;     // remaining MCS count
  std::vector<double> v_avg;        // v_remain / m_remain (scale sweep)
  std::vector<double> d2_primary;   // second derivative of the primary series
  std::vector<double> d2_secondary; // second derivative of v_avg (scale sweep)
};

struct ThresholdSuggestion {
  FilterThresholds suggested;
  std::vector<ThresholdCurve> curves;
};

/// Smallest sampled x after which |f''| stays within stability_ratio of
/// its peak for the rest of the grid. Central differences on the sampled
/// (possibly non-uniform) grid; needs >= 5 samples. A flat-curvature
/// series suggests the first sample.
double suggest_from_curve(const std::vector<double>& xs, const std::vector<double>& ys,
                          double stability_ratio = 0.01);

struct SweepGrids {
  std::vector<double> scale;      // candidate v_min / v_max sweep
  std::vector<double> degree;     // candidate hub degree threshold
  std::vector<double> hub_count;  // candidate minimum hub count

  static SweepGrids defaults();
};

/// Sweeps the post-prune snapshot: remaining vertices / MCS counts vs the
/// scale threshold (suggests v_min from V_remain and v_max from the
/// average-size trend), remaining hub-qualified vertices vs the degree
/// threshold (suggests d_hub), then remaining MCSs vs the hub-count
/// threshold at the suggested d_hub (suggests n_hub_min).
ThresholdSuggestion suggest_thresholds(const GraphSnapshot& snap, const SweepGrids& grids);

std::string curves_csv(const ThresholdCurve& curve);

}  // namespace aml
