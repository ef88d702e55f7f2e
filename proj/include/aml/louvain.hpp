#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "aml/common.hpp"

namespace aml {

struct LouvainEdge {
  int src = 0;
  int dst = 0;
  double weight = 0.0;
};

/// Weighted digraph in CSR form with the per-node quantities the quality
/// function needs.
///
/// The quality function treats the adjacency as symmetrized: A_ij is the
/// total weight between i and j (w(i->j) + w(j->i), self-loops doubled),
/// m is the total directed weight, and sum_i k_i = 2m. Direction enters
/// through delta_n = (k_in - k_out) / k, which skews the null model by
/// e^{delta_i - delta_j}. All stored edges stay directed; the symmetrized
/// view only shapes the modularity terms.
class WeightedDigraph {
 public:
  WeightedDigraph() = default;

  /// Builds from directed edges over ids [0, n). Duplicate (src, dst)
  /// pairs are a StructuralError, non-positive weights a ConfigError.
  /// Every node must end up with k > 0 (callers prune isolated nodes
  /// first); offenders raise StructuralError.
  static WeightedDigraph build(int n, std::vector<LouvainEdge> edges);

  int size() const { return n_; }
  double total_weight() const { return total_weight_; }  // sum over directed arcs
  double two_m() const { return 2.0 * total_weight_; }

  double k(int v) const { return k_[v]; }
  double k_in(int v) const { return k_in_[v]; }
  double k_out(int v) const { return k_out_[v]; }
  double delta_factor(int v) const { return delta_[v]; }
  double exp_delta(int v) const { return exp_delta_[v]; }
  double exp_neg_delta(int v) const { return exp_neg_delta_[v]; }
  double self_weight(int v) const { return self_w_[v]; }

  // Out-neighbors of v as parallel spans (targets, weights); likewise in.
  std::span<const int> out_targets(int v) const;
  std::span<const double> out_weights(int v) const;
  std::span<const int> in_sources(int v) const;
  std::span<const double> in_weights(int v) const;

  const std::vector<LouvainEdge>& arcs() const { return arcs_; }

 private:
  int n_ = 0;
  double total_weight_ = 0.0;
  std::vector<int> out_off_, out_to_, in_off_, in_from_;
  std::vector<double> out_w_, in_w_;
  std::vector<double> k_, k_in_, k_out_, delta_, exp_delta_, exp_neg_delta_, self_w_;
  std::vector<LouvainEdge> arcs_;  // sorted by (src, dst)
};

/// delta_n = (k_in - k_out) / k for every node; requires k > 0 everywhere.
std::vector<double> delta_factors(const WeightedDigraph& g);

/// Node -> community assignment plus the per-community aggregates that make
/// move gains O(deg): intra weight (symmetrized), S+ = sum e^{delta} k and
/// S- = sum e^{-delta} k over members.
class CommunityState {
 public:
  explicit CommunityState(const WeightedDigraph& g);  // every node its own tag

  const WeightedDigraph& graph() const { return *g_; }
  int community(int v) const { return comm_[v]; }
  const std::vector<int>& assignment() const { return comm_; }
  int community_count() const { return live_; }

  double intra_weight(int c) const { return w_in_[c]; }  // Sigma W_ec over symmetrized A
  double s_plus(int c) const { return s_plus_[c]; }
  double s_minus(int c) const { return s_minus_[c]; }
  int size(int c) const { return size_[c]; }

  /// Detaches v from its community (v holds no tag afterwards). Returns
  /// the vacated tag.
  int detach(int v);
  /// Inserts a detached v into tag c (c may be empty, re-creating it).
  void insert(int v, int c);
  /// Detach + insert into an unused tag; returns the fresh tag.
  int remove_to_singleton(int v);

  /// Replaces the whole assignment and recomputes aggregates.
  void rebuild(std::span<const int> assignment);

 private:
  friend double directed_modularity(const CommunityState&);
  const WeightedDigraph* g_;
  std::vector<int> comm_;
  std::vector<double> w_in_, s_plus_, s_minus_;
  std::vector<int> size_;
  std::vector<int> free_tags_;
  int live_ = 0;

  double symmetrized_degree_into(int v, int c) const;  // 2 * sum_{j in c} (A_vj + A_jv)
};

/// Q_D = sum_c [ intra(c)/(2m) - S+(c) S-(c)/(2m)^2 ].
double directed_modularity(const CommunityState& s);

/// Convenience: build a state from an assignment and evaluate Q_D.
double modularity_of_assignment(const WeightedDigraph& g, std::span<const int> assignment);

/// Raw incremental form: gain of inserting an isolated node with totals
/// (k, delta) and symmetrized adjacency k_i_c into a community with the
/// given aggregates. Exposed for the degenerate-aggregate checks.
double insertion_gain_terms(double k_i_c_sym, double k_i, double exp_delta_i,
                            double exp_neg_delta_i, double s_plus_c, double s_minus_c,
                            double two_m);

/// Gain of inserting node v (currently detached / singleton) into
/// community c, per the incremental formula. Throws StructuralError when
/// c has no members.
double delta_modularity(const CommunityState& s, int v, int c);

struct SweepStats {
  int moved = 0;
  double min_accepted_gain = std::numeric_limits<double>::infinity();
};

/// One serial pass over nodes in ascending id order. Each node is detached,
/// the net gain of every distinct neighbor community (and of returning
/// home) is evaluated, and the best strictly positive net gain wins; ties
/// break to the smallest tag.
SweepStats serial_local_move_sweep(CommunityState& s);

/// Messages gathered for one node during a synchronous round: the frozen
/// per-neighbor view the move decision is computed from.
struct NodeExchangeInfo {
  int node = -1;
  int neighbor = -1;
  double k_node = 0.0, k_node_in = 0.0, k_node_out = 0.0;
  double k_neighbor = 0.0, k_neighbor_in = 0.0, k_neighbor_out = 0.0;
  int community_node = -1;
  int community_neighbor = -1;
  double delta_node = 0.0, delta_neighbor = 0.0;
  double weight_out = 0.0;  // node -> neighbor
  double weight_in = 0.0;   // neighbor -> node
};

std::vector<NodeExchangeInfo> gather_exchange_info(const CommunityState& s, int v);

/// Bulk-synchronous proposal round: every node picks its best move against
/// the frozen state; nothing is applied. Deterministic for any worker
/// count.
std::vector<int> parallel_sweep(const CommunityState& s, int workers);

/// Repairs the two synchronous-update artifacts: community swaps (pairs
/// that exchanged tags) are reverted, and nodes that followed a fully
/// vacated tag are forwarded along the relabel chain of its previous
/// members (cycles revert). Iterates until neither rule fires, so the
/// result has no 2-cycle relabels and no node on a dead tag.
std::vector<int> resolve_swap_lag(std::span<const int> prev, std::span<const int> proposed);

struct CompressedGraph {
  WeightedDigraph graph;
  std::vector<std::vector<int>> members;  // new node -> nodes of the previous level
};

/// One node per non-empty community; intra-community weight becomes the
/// new node's self-loop, directed inter-community weights are summed.
CompressedGraph compress(const CommunityState& s);

enum class LouvainMode { kSerial, kParallel };

struct LouvainOptions {
  LouvainMode mode = LouvainMode::kParallel;
  double epsilon_q = 1e-7;  // minimum within-level Q improvement to continue
  int max_levels = 20;
  int max_rounds = 100;  // synchronous rounds per level before serial fallback
  int max_sweeps = 1000;
  int workers = 1;
};

struct LevelTrace {
  int level = 0;
  int nodes = 0;
  int communities = 0;
  double q_start = 0.0;  // singleton partition on this level's graph
  double q_end = 0.0;
  int rounds = 0;  // synchronous rounds (parallel mode)
  int sweeps = 0;
  bool serial_fallback = false;
};

struct LouvainResult {
  std::vector<int> assignment;  // original node -> community, renumbered 0..K-1
  std::vector<std::vector<int>> level_tags;  // per level, original node -> tag at that level
  std::vector<LevelTrace> trace;
  double final_q = 0.0;  // Q_D of the final partition on the original graph
  int community_count = 0;
};

/// Full multi-level optimization: stage-1 sweeps to a fixpoint, stage-2
/// compression, repeated until the within-level improvement drops below
/// epsilon_q or max_levels is hit. Parallel mode runs synchronous rounds
/// with swap/lag repair after each and falls back to serial sweeps for a
/// level when rounds stall or exceed max_rounds. Communities in the result
/// are renumbered by ascending minimum member id.
LouvainResult run_louvain(const WeightedDigraph& g, const LouvainOptions& opts);

}  // namespace aml
