#pragma once

#include <string>
#include <vector>

#include "aml/graph.hpp"

namespace aml {

/// Ratio groups and numeric guards for the weighting stages. Each ratio
/// group must sum to 1 (tolerance 1e-9) with non-negative entries.
struct WeightConfig {
  double money_ratio = 0.5;  // w_m
  double count_ratio = 0.5;  // w_c

  double node_money_ratio = 1.0 / 3.0;   // w_Mv
  double node_count_ratio = 1.0 / 3.0;   // w_Cv
  double node_degree_ratio = 1.0 / 3.0;  // w_Dv

  double exponent_clamp = 30.0;
  double tau_epsilon = 1.0;  // seconds; floor for the timing denominator
  bool log_money = false;

  void validate() const;
};

/// Node correction factor sigma = exp(clamp(w_Mv*M + w_Cv*C + w_Dv*D))
/// over the node's standardized total money, transfer count and degree.
struct NodeCorrection {
  NodeId node = kNoNode;
  double money_std = 0.0;
  double count_std = 0.0;
  double degree_std = 0.0;
  double sigma = 1.0;
};

/// Temporal pattern correction for one edge. beta is the endpoint's
/// direction imbalance (deg_in - deg_out) / deg; tau the window length
/// over the gap between the edge's mean time and the endpoint's mean
/// inbound (src) or outbound (dst) time.
struct TemporalCorrection {
  double beta_src = 0.0;
  double beta_dst = 0.0;
  double tau_src_out = 0.0;  // 0 when src has no inbound transfers
  double tau_dst_in = 0.0;   // 0 when dst has no outbound transfers
  double theta_src = 1.0;
  double theta_dst = 1.0;
};

/// Standardizes per-node money / count / degree across the present nodes
/// of g and produces sigma for each. Indexed by dense id (absent nodes get
/// a neutral sigma of 1).
std::vector<NodeCorrection> node_corrections(const TransactionGraph& g, const WeightConfig& cfg);

/// w_N = sigma_src * sigma_dst * w_B.
double apply_node_correction(const MergedEdge& edge, const NodeCorrection& src,
                             const NodeCorrection& dst);

TemporalCorrection temporal_correction(const MergedEdge& edge, const NodeStats& src_stats,
                                       const NodeStats& dst_stats, const TimeWindow& window,
                                       const WeightConfig& cfg);

/// Final weight per the four-case rule: theta_src applies when beta_src > 0,
/// theta_dst when beta_dst < 0; beta == 0 applies no correction from that
/// endpoint.
double final_weight(const MergedEdge& edge, const TemporalCorrection& tc);

/// Runs the full weighting pass over g's edges in place: node corrections,
/// w_N, temporal corrections, W_E. Node standardization population is g's
/// present node set (the graph communities are detected on).
void apply_weights(TransactionGraph& g, const WeightConfig& cfg);

/// Audit export: src,dst,M,C,T_sd,w_B,w_N,W_E.
std::string weighted_edges_csv(const TransactionGraph& g);

}  // namespace aml
