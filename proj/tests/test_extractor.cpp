#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "pcn/error.hpp"
#include "pcn/extractor.hpp"
#include "pcn/lexer.hpp"
#include "support/temp_dir.hpp"

using namespace pcn;
using pcn::testing::TempDir;

namespace {

std::vector<DefinitionSpan> defs_of(const std::string& src) {
  const LexResult lexed = tokenize(src, "t.c");
  return extract_definitions(lexed.tokens, "t.c");
}

std::set<std::string> def_names(const std::string& src) {
  std::set<std::string> names;
  for (const DefinitionSpan& d : defs_of(src)) names.insert(d.def.name);
  return names;
}

std::vector<CallRecord> calls_of(const std::string& src, std::size_t def_index = 0) {
  const LexResult lexed = tokenize(src, "t.c");
  const auto spans = extract_definitions(lexed.tokens, "t.c");
  REQUIRE(spans.size() > def_index);
  const DefinitionSpan& span = spans[def_index];
  return extract_calls(span.def,
                       std::span<const Token>(lexed.tokens.data() + span.body_begin,
                                              lexed.tokens.data() + span.body_end));
}

}  // namespace

TEST_CASE("two adjacent definitions are recognized") {
  CHECK(def_names("int f(){ g(); } int g(){ }") == std::set<std::string>{"f", "g"});
}

TEST_CASE("keywords never become definitions") {
  CHECK(def_names("if (x) { }").empty());
  CHECK(def_names("while (x) { } for (;;) { } switch (x) { }").empty());
}

TEST_CASE("prototypes are not definitions") {
  CHECK(def_names("int f(int);").empty());
  CHECK(def_names("extern void g(void);\nint h(char*);").empty());
}

TEST_CASE("prototype followed by a struct body is not chained into a definition") {
  CHECK(def_names("int f(void); struct s { int x; };").empty());
  CHECK(def_names("typedef int (*fn)(void); struct s { int x; };").empty());
}

TEST_CASE("K&R parameter declarations are tolerated") {
  const auto defs = defs_of("int max(a, b) int a; int b; { return a > b ? a : b; }");
  REQUIRE(defs.size() == 1);
  CHECK(defs[0].def.name == "max");
}

TEST_CASE("attribute macros between parameters and body are tolerated") {
  const auto names = def_names("static void lock_it(void) __acquires(lock) { }");
  CHECK(names == std::set<std::string>{"lock_it"});
}

TEST_CASE("definition extents cover the body") {
  const auto defs = defs_of("int f(int x)\n{\n  return x;\n}\n");
  REQUIRE(defs.size() == 1);
  CHECK(defs[0].def.start_line == 1);
  CHECK(defs[0].def.end_line == 4);
}

TEST_CASE("initializers with braces do not produce definitions") {
  CHECK(def_names("struct ops o = { .open = my_open };").empty());
  CHECK(def_names("int tbl[] = { 1, 2, 3 };").empty());
  CHECK(def_names("static int (*handlers[2])(void) = { h1, h2 };").empty());
}

TEST_CASE("member access cannot start a definition") {
  CHECK(def_names("x.init(3) { }").empty());
  CHECK(def_names("p->init(3) { }").empty());
}

TEST_CASE("unbalanced braces keep earlier definitions and diagnose") {
  const LexResult lexed = tokenize("int f(){ } int g(){ ", "t.c");
  std::vector<Diagnostic> diags;
  const auto defs = extract_definitions(lexed.tokens, "t.c", &diags);
  REQUIRE(defs.size() == 1);
  CHECK(defs[0].def.name == "f");
  REQUIRE(!diags.empty());
  CHECK(diags[0].file == "t.c");
}

TEST_CASE("call multiplicity is counted per occurrence") {
  const auto records = calls_of("int f(){ g(); g(); }");
  REQUIRE(records.size() == 1);
  CHECK(records[0].callee_name == "g");
  CHECK(records[0].count == 2);
}

TEST_CASE("keywords are not calls") {
  CHECK(calls_of("int f(){ sizeof(x); if(y){} return (z); }").empty());
}

TEST_CASE("recursion yields a self call record") {
  const auto records = calls_of("int r(){ r(); }");
  REQUIRE(records.size() == 1);
  CHECK(records[0].callee_name == "r");
  CHECK(records[0].count == 1);
}

TEST_CASE("member calls and unary address-of are not counted") {
  const auto records = calls_of("int f(){ s.open(); p->close(); cb = &handler; }");
  CHECK(records.empty());
}

TEST_CASE("bitwise AND before a call does not mask it") {
  const auto records = calls_of("int f(){ x = mask & get_flags(); }");
  REQUIRE(records.size() == 1);
  CHECK(records[0].callee_name == "get_flags");
}

TEST_CASE("calls inside macro definitions are invisible") {
  const auto records = calls_of("int f(){\n#define DO() helper()\n  work();\n}");
  REQUIRE(records.size() == 1);
  CHECK(records[0].callee_name == "work");
}

TEST_CASE("calls inside string literals are invisible") {
  const auto records = calls_of("int f(){ puts(\"g(1)\"); }");
  REQUIRE(records.size() == 1);
  CHECK(records[0].callee_name == "puts");
}

TEST_CASE("build_pcn on the toy corpus") {
  TempDir dir("toy");
  dir.write("a.c", "int f() { g(); }\n");
  dir.write("b.c", "int g() { }\n");
  const PcnBuildResult result = build_pcn(dir.path());
  CHECK(result.graph.node_count() == 2);
  REQUIRE(result.graph.edges().size() == 1);
  const Edge e = result.graph.edges()[0];
  CHECK(result.graph.name(e.src) == "f");
  CHECK(result.graph.name(e.dst) == "g");
  CHECK(e.multiplicity == 1);
  CHECK(result.report.unresolved_calls.empty());
  CHECK(result.report.files_scanned == 2);
  CHECK(result.report.calls_total == 1);
}

TEST_CASE("calls to undefined procedures make no node and no edge") {
  TempDir dir("ext");
  dir.write("a.c", "int f() { undefined_lib(); undefined_lib(); }\n");
  const PcnBuildResult result = build_pcn(dir.path());
  CHECK(result.graph.node_count() == 1);
  CHECK(result.graph.edges().empty());
  REQUIRE(result.report.unresolved_calls.count("undefined_lib") == 1);
  CHECK(result.report.unresolved_calls.at("undefined_lib") == 2);
}

TEST_CASE("same-name definitions merge into one node by default") {
  TempDir dir("merge");
  dir.write("a.c", "static int init() { helper_a(); } int helper_a() { }\n");
  dir.write("b.c", "static int init() { helper_b(); } int helper_b() { }\n");
  const PcnBuildResult result = build_pcn(dir.path());
  CHECK(result.graph.node_count() == 3);  // init, helper_a, helper_b
  // both bodies' calls attach to the merged node
  std::uint64_t out_of_init = 0;
  for (const Edge& e : result.graph.edges())
    if (result.graph.name(e.src) == "init") out_of_init += e.multiplicity;
  CHECK(out_of_init == 2);
}

TEST_CASE("file scope keeps same-name definitions distinct") {
  TempDir dir("scope");
  dir.write("a.c", "static int init() { }\n");
  dir.write("b.c", "static int init() { }\n");
  ExtractorConfig config;
  config.scope = Scope::file;
  const PcnBuildResult result = build_pcn(dir.path(), config);
  CHECK(result.graph.node_count() == 2);
  CHECK(result.graph.name(0) == "a.c:init");
  CHECK(result.graph.name(1) == "b.c:init");
}

TEST_CASE("file scope resolves same-file callees first") {
  TempDir dir("scoperes");
  dir.write("a.c", "static int helper() { } int fa() { helper(); }\n");
  dir.write("b.c", "static int helper() { } int fb() { helper(); }\n");
  ExtractorConfig config;
  config.scope = Scope::file;
  const PcnBuildResult result = build_pcn(dir.path(), config);
  CHECK(result.graph.node_count() == 4);
  for (const Edge& e : result.graph.edges()) {
    const std::string& src = result.graph.name(e.src);
    const std::string& dst = result.graph.name(e.dst);
    CHECK(src.substr(0, 3) == dst.substr(0, 3));  // same file prefix
  }
}

TEST_CASE("missing root raises corpus not found") {
  CHECK_THROWS_WITH_AS(build_pcn("/nonexistent/path/xyz"),
                       doctest::Contains("corpus not found"), Error);
}

TEST_CASE("a corpus without definitions raises empty corpus") {
  TempDir dir("empty");
  dir.write("a.c", "/* nothing here */\nint x = 3;\n");
  CHECK_THROWS_AS(build_pcn(dir.path()), EmptyCorpusError);
}

TEST_CASE("extension filter selects files") {
  TempDir dir("ext2");
  dir.write("a.c", "int f() { }\n");
  dir.write("b.cpp", "int g() { }\n");
  const PcnBuildResult result = build_pcn(dir.path());
  CHECK(result.graph.node_count() == 1);
  CHECK(result.graph.name(0) == "f");
}

TEST_CASE("conservation: calls_total = resolved + unresolved") {
  TempDir dir("conserve");
  dir.write("z/a.c", "int f() { g(); g(); ext(); }\n");
  dir.write("g.h", "static inline int g() { memset(0); }\n");
  const PcnBuildResult result = build_pcn(dir.path());
  std::uint64_t resolved = 0;
  for (const Edge& e : result.graph.edges()) resolved += e.multiplicity;
  std::uint64_t unresolved = 0;
  for (const auto& [name, count] : result.report.unresolved_calls)
    unresolved += count;
  CHECK(result.report.calls_total == resolved + unresolved);
  CHECK(result.report.calls_total == 4);
}

TEST_CASE("no keyword ever names a node or callee") {
  TempDir dir("kw");
  dir.write("a.c",
            "int f() { if (x) { while (y) do_it(); } switch (z) { case 1: break; } }\n"
            "int do_it() { return 0; }\n");
  const PcnBuildResult result = build_pcn(dir.path());
  for (const std::string& name : result.graph.names())
    CHECK(!is_reserved_keyword(name));
  for (const auto& [name, count] : result.report.unresolved_calls)
    CHECK(!is_reserved_keyword(name));
}

TEST_CASE("scans are deterministic across thread counts") {
  TempDir dir("det");
  dir.write("dir1/a.c", "int f() { g(); h(); }\n");
  dir.write("dir2/b.c", "int g() { h(); }\n");
  dir.write("h.h", "static inline int h() { }\n");
  ExtractorConfig one;
  one.threads = 1;
  ExtractorConfig many;
  many.threads = 8;
  const PcnBuildResult r1 = build_pcn(dir.path(), one);
  const PcnBuildResult r2 = build_pcn(dir.path(), many);
  CHECK(r1.graph.names() == r2.graph.names());
  CHECK(r1.graph.edges() == r2.graph.edges());
}

TEST_CASE("headers contribute inline definitions") {
  TempDir dir("hdr");
  dir.write("a.h", "static inline int helper(void) { return 1; }\n");
  dir.write("a.c", "int f() { return helper(); }\n");
  const PcnBuildResult result = build_pcn(dir.path());
  CHECK(result.graph.node_count() == 2);
  CHECK(result.report.unresolved_calls.empty());
}
