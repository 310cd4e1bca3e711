#include "pcn/extractor.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "pcn/error.hpp"

namespace fs = std::filesystem;

namespace pcn {

namespace {

// Keywords that can precede '(' but never name a procedure.
constexpr std::array<std::string_view, 15> kKeywords = {
    "case", "default", "do",     "else",   "enum",  "for",     "goto", "if",
    "return", "sizeof", "struct", "switch", "typedef", "union", "while",
};

constexpr std::size_t kDeclLookaheadMax = 256;

bool punct_is(const Token& t, char c) {
  return t.kind == TokenKind::Punct && t.text.size() == 1 && t.text[0] == c;
}

bool decl_token_allowed(const Token& t) {
  switch (t.kind) {
    case TokenKind::Identifier:
    case TokenKind::Number:
    case TokenKind::PreprocessorLine:
      return true;
    case TokenKind::Punct:
      return t.text == "*" || t.text == "," || t.text == ";" ||
             t.text == "[" || t.text == "]" || t.text == "(" || t.text == ")";
    default:
      return false;
  }
}

// Decides whether tokens [after_paren, body) form a valid gap between the
// parameter list and the body brace: either K&R parameter declarations
// (must end with ';') or attribute-like macro annotations (no ';' at all).
bool gap_accepts_body(std::span<const Token> tokens, std::size_t after_paren,
                      std::size_t body) {
  if (after_paren == body) return true;
  bool has_semicolon = false;
  int paren_balance = 0;
  std::size_t last_real = SIZE_MAX;
  for (std::size_t k = after_paren; k < body; ++k) {
    const Token& t = tokens[k];
    if (t.kind == TokenKind::PreprocessorLine) continue;
    if (punct_is(t, '(')) ++paren_balance;
    if (punct_is(t, ')')) --paren_balance;
    if (punct_is(t, ';')) has_semicolon = true;
    last_real = k;
  }
  if (paren_balance != 0) return false;
  if (last_real == SIZE_MAX) return true;
  if (has_semicolon)  // K&R declarations: the last one must be closed
    return punct_is(tokens[last_real], ';');
  return true;  // attribute-style annotations
}

struct FileScanResult {
  std::string rel_path;
  std::vector<ProcedureDef> defs;
  // calls[i] belongs to defs[i]; (callee name, occurrence count)
  std::vector<std::vector<std::pair<std::string, std::uint64_t>>> calls;
  std::vector<Diagnostic> diagnostics;
  bool read_ok = true;
};

FileScanResult scan_file(const fs::path& abs_path, const std::string& rel_path) {
  FileScanResult result;
  result.rel_path = rel_path;

  std::ifstream in(abs_path, std::ios::binary);
  if (!in) {
    result.read_ok = false;
    result.diagnostics.push_back(Diagnostic{rel_path, 0, "cannot read file"});
    return result;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string source = buf.str();

  LexResult lexed = tokenize(source, rel_path);
  result.diagnostics = std::move(lexed.diagnostics);

  std::vector<DefinitionSpan> spans =
      extract_definitions(lexed.tokens, rel_path, &result.diagnostics);
  result.defs.reserve(spans.size());
  result.calls.reserve(spans.size());
  for (const DefinitionSpan& span : spans) {
    std::span<const Token> body(lexed.tokens.data() + span.body_begin,
                                lexed.tokens.data() + span.body_end);
    std::vector<CallRecord> records = extract_calls(span.def, body);
    std::vector<std::pair<std::string, std::uint64_t>> calls;
    calls.reserve(records.size());
    for (CallRecord& r : records)
      calls.emplace_back(std::move(r.callee_name), r.count);
    result.defs.push_back(span.def);
    result.calls.push_back(std::move(calls));
  }
  return result;
}

unsigned thread_budget(const ExtractorConfig& config, std::size_t jobs) {
  unsigned threads = config.threads;
  if (threads == 0) threads = std::thread::hardware_concurrency();
  if (const char* env = std::getenv("PCN_THREADS")) {
    const long cap = std::strtol(env, nullptr, 10);
    if (cap > 0 && static_cast<unsigned>(cap) < threads)
      threads = static_cast<unsigned>(cap);
  }
  if (threads == 0) threads = 1;
  return static_cast<unsigned>(std::min<std::size_t>(threads, jobs));
}

}  // namespace

bool is_reserved_keyword(std::string_view word) {
  return std::find(kKeywords.begin(), kKeywords.end(), word) != kKeywords.end();
}

std::vector<DefinitionSpan> extract_definitions(std::span<const Token> tokens,
                                                const std::string& file,
                                                std::vector<Diagnostic>* diagnostics) {
  std::vector<DefinitionSpan> defs;
  auto diag = [&](std::uint32_t line, const char* msg) {
    if (diagnostics) diagnostics->push_back(Diagnostic{file, line, msg});
  };

  long depth = 0;
  std::size_t i = 0;
  while (i < tokens.size()) {
    const Token& t = tokens[i];
    if (t.kind == TokenKind::PreprocessorLine) {
      ++i;
      continue;
    }
    if (punct_is(t, '{')) {
      ++depth;
      ++i;
      continue;
    }
    if (punct_is(t, '}')) {
      if (depth == 0)
        diag(t.line, "unbalanced braces");
      else
        --depth;
      ++i;
      continue;
    }
    if (depth != 0 || t.kind != TokenKind::Identifier ||
        is_reserved_keyword(t.text)) {
      ++i;
      continue;
    }
    if (i > 0) {
      const Token& prev = tokens[i - 1];
      if (prev.is_punct(".") || prev.is_punct("->") ||
          prev.kind == TokenKind::PreprocessorLine) {
        ++i;
        continue;
      }
    }
    if (i + 1 >= tokens.size() || !punct_is(tokens[i + 1], '(')) {
      ++i;
      continue;
    }

    // Match the parameter list parentheses.
    std::size_t j = i + 1;
    int paren_depth = 0;
    while (j < tokens.size()) {
      if (punct_is(tokens[j], '(')) ++paren_depth;
      if (punct_is(tokens[j], ')') && --paren_depth == 0) break;
      ++j;
    }
    if (j >= tokens.size()) {
      ++i;
      continue;
    }
    ++j;  // first token after ')'

    // Look ahead for the body brace across K&R declarations or attributes.
    std::size_t body = SIZE_MAX;
    for (std::size_t k = j, seen = 0;
         k < tokens.size() && seen < kDeclLookaheadMax; ++k, ++seen) {
      if (punct_is(tokens[k], '{')) {
        if (gap_accepts_body(tokens, j, k)) body = k;
        break;
      }
      if (!decl_token_allowed(tokens[k])) break;
    }
    if (body == SIZE_MAX) {
      ++i;
      continue;
    }

    // Match the body braces.
    std::size_t end = SIZE_MAX;
    long body_depth = 1;
    for (std::size_t k = body + 1; k < tokens.size(); ++k) {
      if (punct_is(tokens[k], '{')) ++body_depth;
      if (punct_is(tokens[k], '}') && --body_depth == 0) {
        end = k;
        break;
      }
    }
    if (end == SIZE_MAX) {
      diag(t.line, "unbalanced braces");
      break;  // keep definitions found so far
    }

    DefinitionSpan span;
    span.def.name = std::string(t.text);
    span.def.file = file;
    span.def.start_line = t.line;
    span.def.end_line = tokens[end].line;
    span.body_begin = body + 1;
    span.body_end = end;
    defs.push_back(std::move(span));
    i = end + 1;
  }
  return defs;
}

std::vector<CallRecord> extract_calls(const ProcedureDef& def,
                                      std::span<const Token> body_tokens) {
  std::map<std::string, std::uint64_t> counts;

  // Nearest real (non-directive) token before index k, or nullptr.
  auto prev_real = [&](std::size_t k) -> const Token* {
    while (k > 0) {
      --k;
      if (body_tokens[k].kind != TokenKind::PreprocessorLine)
        return &body_tokens[k];
    }
    return nullptr;
  };

  for (std::size_t k = 0; k < body_tokens.size(); ++k) {
    const Token& t = body_tokens[k];
    if (t.kind != TokenKind::Identifier || is_reserved_keyword(t.text)) continue;
    std::size_t next = k + 1;
    while (next < body_tokens.size() &&
           body_tokens[next].kind == TokenKind::PreprocessorLine)
      ++next;
    if (next >= body_tokens.size() || !punct_is(body_tokens[next], '(')) continue;

    if (const Token* prev = prev_real(k)) {
      if (prev->is_punct(".") || prev->is_punct("->")) continue;
      if (prev->is_punct("&")) {
        // Unary address-of is not a call site; binary AND is unrelated.
        const Token* before = nullptr;
        for (std::size_t m = k; m > 0;) {
          --m;
          if (&body_tokens[m] == prev) {
            before = prev_real(m);
            break;
          }
        }
        const bool binary =
            before && (before->kind == TokenKind::Identifier ||
                       before->kind == TokenKind::Number ||
                       before->is_punct(")") || before->is_punct("]"));
        if (!binary) continue;
      }
    }
    ++counts[std::string(t.text)];
  }

  std::vector<CallRecord> records;
  records.reserve(counts.size());
  for (auto& [name, count] : counts)
    records.push_back(CallRecord{def.node_id, name, count});
  return records;
}

PcnBuildResult build_pcn(const fs::path& root, const ExtractorConfig& config) {
  if (!fs::exists(root))
    throw Error("corpus not found: " + root.string());

  // Collect matching files; sorting by relative path makes node numbering
  // independent of directory traversal order.
  std::vector<std::pair<std::string, fs::path>> files;
  if (fs::is_regular_file(root)) {
    files.emplace_back(root.filename().generic_string(), root);
  } else {
    std::error_code ec;
    fs::recursive_directory_iterator it(
        root, fs::directory_options::skip_permission_denied, ec);
    if (ec) throw Error("corpus not found: " + root.string());
    for (const fs::directory_entry& entry : it) {
      if (entry.is_symlink() || !entry.is_regular_file()) continue;
      std::string ext = entry.path().extension().string();
      if (!ext.empty() && ext.front() == '.') ext.erase(0, 1);
      if (std::find(config.extensions.begin(), config.extensions.end(), ext) ==
          config.extensions.end())
        continue;
      files.emplace_back(fs::relative(entry.path(), root).generic_string(),
                         entry.path());
    }
  }
  std::sort(files.begin(), files.end());

  std::vector<FileScanResult> scans(files.size());
  const unsigned threads = thread_budget(config, files.size());
  if (threads <= 1) {
    for (std::size_t i = 0; i < files.size(); ++i)
      scans[i] = scan_file(files[i].second, files[i].first);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < files.size();
             i = next.fetch_add(1))
          scans[i] = scan_file(files[i].second, files[i].first);
      });
    }
    for (std::thread& th : pool) th.join();
  }

  PcnBuildResult result;
  ExtractionReport& report = result.report;

  // Pass 1: assign node ids in first-definition order over sorted files.
  std::unordered_map<std::string, std::uint32_t> node_of_key;
  std::unordered_map<std::string, std::uint32_t> first_node_of_name;
  std::vector<std::vector<std::uint32_t>> def_node(scans.size());
  std::vector<std::string> names;
  for (std::size_t f = 0; f < scans.size(); ++f) {
    FileScanResult& scan = scans[f];
    if (scan.read_ok) ++report.files_scanned;
    for (Diagnostic& d : scan.diagnostics)
      report.diagnostics.push_back(std::move(d));
    def_node[f].reserve(scan.defs.size());
    for (ProcedureDef& def : scan.defs) {
      const std::string key = config.scope == Scope::global
                                  ? def.name
                                  : scan.rel_path + ":" + def.name;
      auto [it, inserted] =
          node_of_key.emplace(key, static_cast<std::uint32_t>(names.size()));
      if (inserted) {
        names.push_back(key);
        def.node_id = it->second;
        result.procedures.push_back(def);
        first_node_of_name.emplace(def.name, it->second);
      }
      def_node[f].push_back(it->second);
    }
  }
  report.procedures_found = names.size();
  if (names.empty()) throw EmptyCorpusError("empty corpus");

  // Pass 2: resolve call records against the full node universe.
  std::vector<Edge> edges;
  for (std::size_t f = 0; f < scans.size(); ++f) {
    const FileScanResult& scan = scans[f];
    for (std::size_t d = 0; d < scan.defs.size(); ++d) {
      const std::uint32_t caller = def_node[f][d];
      for (const auto& [callee_name, count] : scan.calls[d]) {
        report.calls_total += count;
        std::uint32_t callee = kUnassignedNode;
        if (config.scope == Scope::file) {
          // Same-file definition wins; otherwise the first defining file.
          auto local = node_of_key.find(scan.rel_path + ":" + callee_name);
          if (local != node_of_key.end()) callee = local->second;
        }
        if (callee == kUnassignedNode) {
          auto it = first_node_of_name.find(callee_name);
          if (it != first_node_of_name.end()) callee = it->second;
        }
        if (callee == kUnassignedNode)
          report.unresolved_calls[callee_name] += count;
        else
          edges.push_back(Edge{caller, callee, static_cast<std::uint32_t>(count)});
      }
    }
  }

  result.graph = CallGraph(std::move(names), std::move(edges));
  return result;
}

}  // namespace pcn
