#include "pcn/call_graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace pcn {

CallGraph::CallGraph(std::vector<std::string> names, std::vector<Edge> edges)
    : n_(static_cast<std::uint32_t>(names.size())), names_(std::move(names)) {
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return a.src != b.src ? a.src < b.src : a.dst < b.dst;
  });
  edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.src >= n_ || e.dst >= n_)
      throw std::out_of_range("edge endpoint out of range");
    if (!edges_.empty() && edges_.back().src == e.src && edges_.back().dst == e.dst)
      edges_.back().multiplicity += e.multiplicity;
    else
      edges_.push_back(e);
  }
  out_start_.assign(static_cast<std::size_t>(n_) + 1, 0);
  for (const Edge& e : edges_) ++out_start_[e.src + 1];
  for (std::size_t i = 1; i < out_start_.size(); ++i)
    out_start_[i] += out_start_[i - 1];
}

std::uint64_t CallGraph::total_call_count() const {
  std::uint64_t total = 0;
  for (const Edge& e : edges_) total += e.multiplicity;
  return total;
}

CallGraph CallGraph::reversed() const {
  std::vector<Edge> rev;
  rev.reserve(edges_.size());
  for (const Edge& e : edges_) rev.push_back(Edge{e.dst, e.src, e.multiplicity});
  return CallGraph(names_, std::move(rev));
}

std::vector<std::uint64_t> degree_sequence(const CallGraph& g, Direction direction,
                                           Counting counting) {
  std::vector<std::uint64_t> degrees(g.node_count(), 0);
  for (const Edge& e : g.edges()) {
    const std::uint32_t node = direction == Direction::out ? e.src : e.dst;
    degrees[node] += counting == Counting::multiplicity ? e.multiplicity : 1;
  }
  return degrees;
}

}  // namespace pcn
