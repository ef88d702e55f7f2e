#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "aml/common.hpp"

namespace aml {

/// Half-open analysis window [start, end) in epoch seconds.
struct TimeWindow {
  std::int64_t start = 0;
  std::int64_t end = 0;

  std::int64_t duration() const { return end - start; }
  bool contains(std::int64_t t) const { return t >= start && t < end; }
  void validate() const;
};

/// One raw transfer. Amounts are kept in integer minor units (cents) so
/// aggregation is drift-free; they are converted to currency units only
/// when standardized.
struct TransactionRecord {
  std::string txn_id;
  std::string src;
  std::string dst;
  std::int64_t amount_minor = 0;
  std::int64_t timestamp = 0;
};

/// Interner mapping account strings to dense ids. Ids are assigned in
/// lexicographic account order, so they are stable for a given input set
/// regardless of record order.
class NodeTable {
 public:
  NodeTable() = default;
  explicit NodeTable(std::vector<std::string> sorted_names);

  NodeId id_of(std::string_view name) const;  // kNoNode when absent
  const std::string& name_of(NodeId id) const { return names_.at(static_cast<size_t>(id)); }
  NodeId size() const { return static_cast<NodeId>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, NodeId> index_;
};

/// Directed edge after merging all transfers with the same ordered
/// (src, dst) pair. Weights are filled in stages: w_primitive after
/// standardization over the whole window's edges, w_node after node
/// corrections, w_final after temporal corrections.
struct MergedEdge {
  NodeId src = kNoNode;
  NodeId dst = kNoNode;
  std::int64_t money_minor = 0;  // M, summed
  std::int64_t count = 0;        // C
  std::int64_t time_sum = 0;     // sum of raw timestamps; mean kept exact

  double money_std = 0.0;
  double count_std = 0.0;
  double w_primitive = 0.0;  // w_B
  double w_node = 0.0;       // w_N
  double w_final = 0.0;      // W_E

  double money_units() const { return static_cast<double>(money_minor) / 100.0; }
  double mean_time() const { return static_cast<double>(time_sum) / static_cast<double>(count); }
};

struct ParseResult {
  std::vector<TransactionRecord> records;
  std::int64_t total_rows = 0;      // data rows seen (excluding header)
  std::int64_t malformed_rows = 0;  // excluded: unparseable or negative amount
  std::int64_t out_of_window = 0;   // well-formed but outside [start, end)
};

struct MergeResult {
  NodeTable nodes;
  std::vector<MergedEdge> edges;  // sorted by (src, dst), unique
};

/// Parses a decimal currency string with at most two fractional digits
/// into minor units. Rejects negatives, exponents and garbage.
std::optional<std::int64_t> parse_amount_minor(std::string_view text);

/// Reads `txn_id,src,dst,amount,timestamp` CSV and keeps rows inside the
/// window. Malformed rows are counted, not fatal, unless they are the
/// majority. Throws IoError if the file cannot be read, FormatError on a
/// bad header or when more than half of the data rows are malformed.
ParseResult parse_transactions(const std::string& path, const TimeWindow& window);

/// Same parser over an in-memory buffer (used by tests and the library API).
ParseResult parse_transactions_text(std::string_view text, const TimeWindow& window);

/// Groups records by ordered (src, dst). Output is sorted by the interned
/// (src, dst) pair, so the result is independent of record order.
MergeResult merge_edges(const std::vector<TransactionRecord>& records);

/// Fills money_std / count_std / w_primitive on every edge:
///   w_B = exp(clamp(w_money * M_std + w_count * C_std)).
/// Standardization runs over all edges passed in (the whole window's merged
/// edges, before any graph filtering). When log_money is set, money goes
/// through log1p before standardization.
void compute_primitive_weights(std::vector<MergedEdge>& edges, double money_ratio,
                               double count_ratio, double exponent_clamp = 30.0,
                               bool log_money = false);

}  // namespace aml
