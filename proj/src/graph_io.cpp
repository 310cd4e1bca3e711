#include "pcn/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "pcn/error.hpp"

namespace pcn {

namespace {

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  return out;
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  return in;
}

bool parse_u64(std::string_view text, std::uint64_t& value) {
  const char* begin = text.data();
  const char* end = begin + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  return ec == std::errc() && ptr == end;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t begin = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > begin) fields.push_back(line.substr(begin, i - begin));
  }
  return fields;
}

std::string_view strip_cr(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
}

}  // namespace

void save_graph(const CallGraph& g, std::ostream& out) {
  out << "PCN v1 N=" << g.node_count() << " E=" << g.edges().size() << "\n";
  for (std::uint32_t i = 0; i < g.node_count(); ++i)
    out << i << " " << g.name(i) << "\n";
  for (const Edge& e : g.edges())
    out << e.src << " " << e.dst << " " << e.multiplicity << "\n";
}

void save_graph(const CallGraph& g, const std::filesystem::path& path) {
  std::ofstream out = open_out(path);
  save_graph(g, out);
  if (!out) throw Error("write failed: " + path.string());
}

CallGraph load_graph(std::istream& in, const std::string& name) {
  std::string line;
  std::size_t lineno = 0;

  auto fail = [&](const std::string& msg) -> ParseError {
    return ParseError(name, lineno, msg);
  };

  if (!std::getline(in, line)) throw fail("empty file");
  ++lineno;
  std::uint64_t n = 0, e = 0;
  {
    std::istringstream header(line);
    std::string magic, version, nfield, efield;
    header >> magic >> version >> nfield >> efield;
    if (magic != "PCN" || version != "v1" || nfield.rfind("N=", 0) != 0 ||
        efield.rfind("E=", 0) != 0)
      throw fail("bad header (expected 'PCN v1 N=<n> E=<e>')");
    if (!parse_u64(nfield.substr(2), n) || !parse_u64(efield.substr(2), e))
      throw fail("bad header counts");
  }

  std::vector<std::string> names;
  names.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    if (!std::getline(in, line)) throw fail("truncated node table");
    ++lineno;
    const std::string_view sv = strip_cr(line);
    const std::size_t space = sv.find(' ');
    if (space == std::string_view::npos) throw fail("malformed node line");
    std::uint64_t id = 0;
    if (!parse_u64(sv.substr(0, space), id) || id != i)
      throw fail("node ids must be sequential");
    names.emplace_back(sv.substr(space + 1));
  }

  std::vector<Edge> edges;
  edges.reserve(e);
  for (std::uint64_t i = 0; i < e; ++i) {
    if (!std::getline(in, line)) throw fail("truncated edge table");
    ++lineno;
    const auto fields = split_ws(strip_cr(line));
    std::uint64_t src = 0, dst = 0, mult = 0;
    if (fields.size() != 3 || !parse_u64(fields[0], src) ||
        !parse_u64(fields[1], dst) || !parse_u64(fields[2], mult))
      throw fail("malformed edge line");
    if (src >= n || dst >= n) throw fail("edge references unknown node id");
    if (mult == 0) throw fail("edge multiplicity must be >= 1");
    edges.push_back(Edge{static_cast<std::uint32_t>(src),
                         static_cast<std::uint32_t>(dst),
                         static_cast<std::uint32_t>(mult)});
  }
  return CallGraph(std::move(names), std::move(edges));
}

CallGraph load_graph(const std::filesystem::path& path) {
  std::ifstream in = open_in(path);
  return load_graph(in, path.string());
}

CallGraph load_edge_list(std::istream& in, EdgeListFormat format,
                         const std::string& name) {
  std::string line;
  std::size_t lineno = 0;

  std::vector<Edge> edges;
  std::uint64_t max_id = 0;
  bool any_edge = false;
  std::unordered_map<std::string, std::uint32_t> id_of_name;
  std::vector<std::string> names;

  auto intern = [&](std::string_view token) {
    auto [it, inserted] = id_of_name.emplace(
        std::string(token), static_cast<std::uint32_t>(names.size()));
    if (inserted) names.emplace_back(token);
    return it->second;
  };

  while (std::getline(in, line)) {
    ++lineno;
    const std::string_view sv = strip_cr(line);
    const auto fields = split_ws(sv);
    if (fields.empty()) continue;
    if (fields[0].front() == '#') continue;
    if (fields.size() != 2)
      throw ParseError(name, lineno, "expected 'src dst'");

    std::uint32_t src, dst;
    if (format == EdgeListFormat::plain) {
      std::uint64_t a = 0, b = 0;
      if (!parse_u64(fields[0], a) || !parse_u64(fields[1], b))
        throw ParseError(name, lineno, "expected nonnegative integer ids");
      max_id = std::max({max_id, a, b});
      src = static_cast<std::uint32_t>(a);
      dst = static_cast<std::uint32_t>(b);
    } else {
      src = intern(fields[0]);
      dst = intern(fields[1]);
    }
    edges.push_back(Edge{src, dst, 1});
    any_edge = true;
  }

  if (!any_edge) throw Error("empty graph: " + name);

  if (format == EdgeListFormat::plain) {
    names.resize(max_id + 1);
    for (std::uint64_t i = 0; i <= max_id; ++i) names[i] = std::to_string(i);
  }
  return CallGraph(std::move(names), std::move(edges));
}

CallGraph load_edge_list(const std::filesystem::path& path, EdgeListFormat format) {
  std::ifstream in = open_in(path);
  return load_edge_list(in, format, path.string());
}

}  // namespace pcn
