#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace pcn {

/// One aggregated directed edge caller -> callee.
struct Edge {
  std::uint32_t src;
  std::uint32_t dst;
  std::uint32_t multiplicity;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Directed multigraph of procedure calls (or a generic edge list).
/// Edges are stored uniquely per (src, dst) pair, sorted, with an index
/// over sources for O(1) per-node edge ranges.
class CallGraph {
 public:
  CallGraph() = default;

  /// `edges` may be unsorted and may contain duplicate (src, dst) pairs;
  /// duplicates have their multiplicities summed.
  CallGraph(std::vector<std::string> names, std::vector<Edge> edges);

  std::uint32_t node_count() const { return n_; }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::uint32_t id) const { return names_[id]; }
  const std::vector<Edge>& edges() const { return edges_; }

  /// Edges with src == id, sorted by dst.
  std::span<const Edge> out_edges(std::uint32_t id) const {
    return std::span<const Edge>(edges_.data() + out_start_[id],
                                 edges_.data() + out_start_[id + 1]);
  }

  /// Sum of all edge multiplicities.
  std::uint64_t total_call_count() const;

  /// Graph with every edge direction inverted (multiplicities kept).
  CallGraph reversed() const;

 private:
  std::uint32_t n_ = 0;
  std::vector<std::string> names_;
  std::vector<Edge> edges_;
  std::vector<std::uint64_t> out_start_;
};

enum class Direction { in, out };
enum class Counting { multiplicity, distinct };

/// Per-node degree sequence, indexed by node id.
std::vector<std::uint64_t> degree_sequence(const CallGraph& g, Direction direction,
                                           Counting counting);

}  // namespace pcn
