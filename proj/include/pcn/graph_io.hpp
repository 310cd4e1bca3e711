#pragma once

#include <filesystem>
#include <iosfwd>

#include "pcn/call_graph.hpp"

namespace pcn {

/// Textual graph format:
///   PCN v1 N=<nodes> E=<edge-pairs>
///   <node_id> <name>          (N lines, ids sequential from 0)
///   <src> <dst> <multiplicity> (E lines, sorted by src then dst)
/// save/load round-trip bit-identically.
void save_graph(const CallGraph& g, const std::filesystem::path& path);
void save_graph(const CallGraph& g, std::ostream& out);

CallGraph load_graph(const std::filesystem::path& path);
CallGraph load_graph(std::istream& in, const std::string& name);

enum class EdgeListFormat { plain, named };

/// Plain format: "src_id dst_id" per line, nonnegative integers, N is
/// max id + 1 (low ids never mentioned stay as isolated nodes). Named
/// format: "src_name dst_name"; nodes are numbered by first appearance.
/// '#' lines are comments; duplicate edges accumulate multiplicity.
CallGraph load_edge_list(const std::filesystem::path& path, EdgeListFormat format);
CallGraph load_edge_list(std::istream& in, EdgeListFormat format,
                         const std::string& name);

}  // namespace pcn
