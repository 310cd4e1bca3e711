#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "pcn/call_graph.hpp"
#include "pcn/lexer.hpp"

namespace pcn {

inline constexpr std::uint32_t kUnassignedNode = 0xffffffff;

/// A procedure definition found by the scanner. Reserved keywords never
/// appear as names; node_id stays kUnassignedNode until the corpus-wide
/// merge assigns dense indices.
struct ProcedureDef {
  std::string name;
  std::string file;
  std::uint32_t start_line = 0;
  std::uint32_t end_line = 0;
  std::uint32_t node_id = kUnassignedNode;
};

/// Aggregated call occurrences from one procedure body to one callee name.
struct CallRecord {
  std::uint32_t caller = kUnassignedNode;
  std::string callee_name;
  std::uint64_t count = 0;
};

struct ExtractionReport {
  std::uint64_t files_scanned = 0;
  std::uint64_t procedures_found = 0;
  std::uint64_t calls_total = 0;
  std::map<std::string, std::uint64_t> unresolved_calls;
  std::vector<Diagnostic> diagnostics;
};

enum class Scope { global, file };

struct ExtractorConfig {
  std::vector<std::string> extensions = {"c", "h"};
  Scope scope = Scope::global;
  // 0 means use hardware concurrency (capped by env PCN_THREADS).
  unsigned threads = 0;
};

/// A definition plus the half-open token range of its body (braces excluded).
struct DefinitionSpan {
  ProcedureDef def;
  std::size_t body_begin = 0;
  std::size_t body_end = 0;
};

/// Recognizes procedure definitions in a token stream: an identifier at
/// brace depth zero, followed by a parenthesized parameter list and a brace
/// body. Handles K&R parameter declarations and post-parameter attribute
/// macros; keywords, prototypes and member accesses are rejected.
std::vector<DefinitionSpan> extract_definitions(std::span<const Token> tokens,
                                                const std::string& file,
                                                std::vector<Diagnostic>* diagnostics = nullptr);

/// Collects `identifier (` call occurrences inside one body range,
/// aggregated per callee name. Keywords, member accesses and unary
/// address-of contexts are excluded; every remaining occurrence counts.
std::vector<CallRecord> extract_calls(const ProcedureDef& def,
                                      std::span<const Token> body_tokens);

struct PcnBuildResult {
  CallGraph graph;
  std::vector<ProcedureDef> procedures;  // indexed by node_id
  ExtractionReport report;
};

/// Scans a source tree (files matching config.extensions, visited in
/// lexicographically sorted path order) and assembles the procedure call
/// network. Throws Error("corpus not found") if root does not exist and
/// EmptyCorpusError if no procedure definitions are found.
PcnBuildResult build_pcn(const std::filesystem::path& root,
                         const ExtractorConfig& config = {});

bool is_reserved_keyword(std::string_view word);

}  // namespace pcn
