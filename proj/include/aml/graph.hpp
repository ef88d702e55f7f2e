#pragma once

#include <cstdint>
#include <vector>

#include "aml/ingest.hpp"

namespace aml {

/// Per-node aggregates. Degrees count distinct merged edges (a self-loop
/// counts once inbound and once outbound). Mean time points are kept as
/// exact integer sums plus counts so the count-weighted mean of inbound
/// edges' T_sd equals the mean over raw inbound transaction timestamps.
struct NodeStats {
  std::int32_t deg_in = 0;
  std::int32_t deg_out = 0;
  std::int64_t money_in_minor = 0;
  std::int64_t money_out_minor = 0;
  std::int64_t count_in = 0;
  std::int64_t count_out = 0;
  std::int64_t time_in_sum = 0;
  std::int64_t time_out_sum = 0;

  std::int32_t deg() const { return deg_in + deg_out; }
  bool has_in_mean() const { return deg_in >= 1; }
  bool has_out_mean() const { return deg_out >= 1; }
  double t_in_mean() const { return static_cast<double>(time_in_sum) / static_cast<double>(count_in); }
  double t_out_mean() const { return static_cast<double>(time_out_sum) / static_cast<double>(count_out); }
};

/// Directed transaction graph over dense node ids. `nodes` lists the ids
/// that are present (carry at least one edge); `stats` is indexed by dense
/// id for the full interned namespace.
struct TransactionGraph {
  TimeWindow window;
  NodeTable names;
  std::vector<MergedEdge> edges;  // unique (src, dst), sorted
  std::vector<NodeStats> stats;   // size == names.size()
  std::vector<NodeId> present;    // ascending

  std::size_t node_count() const { return present.size(); }
  std::size_t edge_count() const { return edges.size(); }
};

struct McsInfo {
  NodeId mcs_id = kNoNode;  // minimum dense node id in the component
  std::int64_t node_count = 0;
  std::int64_t edge_count = 0;
  std::int64_t hub_count = 0;
  bool kept = false;
};

/// Scale and hub filters for maximal connected subgraphs. All comparisons
/// are strict: keep iff v_min < V < v_max and hubs > n_hub_min, where a
/// hub has deg > d_hub.
struct FilterThresholds {
  std::int64_t v_min = 10;
  std::int64_t v_max = 2000;
  std::int64_t d_hub = 20;
  std::int64_t n_hub_min = 7;

  void validate() const;
};

/// Builds the graph and populates NodeStats. Throws StructuralError on a
/// duplicate (src, dst) pair.
TransactionGraph build_graph(const MergeResult& merged, const TimeWindow& window);

/// Removes every edge whose source and destination both touch exactly one
/// edge, then drops nodes left bare. Single pass by default; with
/// `iterate` the pass repeats until no edge qualifies. Stats are
/// recomputed on the surviving edges.
TransactionGraph filter_isolated_edges(const TransactionGraph& g, bool iterate = false);

/// Weak connectivity labels: component id of each present node is the
/// minimum dense node id in the component; absent nodes get kNoNode.
std::vector<NodeId> weakly_connected_components(const TransactionGraph& g);

struct McsFilterResult {
  TransactionGraph graph;       // surviving subgraph; stats reused from input
  std::vector<McsInfo> infos;   // every component, ascending mcs_id, kept flag set
};

/// Applies the scale/hub filter per component. NodeStats are carried over
/// from the input graph unchanged (they describe the post-prune graph).
McsFilterResult filter_mcs(const TransactionGraph& g, const std::vector<NodeId>& components,
                           const FilterThresholds& th);

}  // namespace aml
