#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "qq/qq.h"

namespace {

constexpr int kExitUsage = 2;

struct Failure {
  std::string message;
};

struct QuiverDeleter {
  void operator()(qq_quiver* q) const { qq_quiver_free(q); }
};
struct GraphDeleter {
  void operator()(qq_graph* g) const { qq_graph_free(g); }
};
using QuiverPtr = std::unique_ptr<qq_quiver, QuiverDeleter>;
using GraphPtr = std::unique_ptr<qq_graph, GraphDeleter>;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{path + ": cannot open file"};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void check(qq_status st, const std::string& context) {
  if (st == QQ_OK) return;
  std::string msg = qq_last_error();
  if (msg.empty()) msg = qq_status_name(st);
  throw Failure{context.empty() ? msg : context + ": " + msg};
}

QuiverPtr load_quiver(const std::string& path) {
  const auto text = read_file(path);
  qq_quiver* q = nullptr;
  check(qq_quiver_parse(text.c_str(), &q), path);
  return QuiverPtr(q);
}

GraphPtr load_graph(const std::string& path) {
  const auto text = read_file(path);
  qq_graph* g = nullptr;
  check(qq_graph_parse(text.c_str(), &g), path);
  return GraphPtr(g);
}

int print(char* s, int code = 0) {
  std::fputs(s, stdout);
  qq_string_free(s);
  return code;
}

int print_verdict(char* s, qq_verdict v) { return print(s, static_cast<int>(v)); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum quiver toolkit"};
  app.require_subcommand(1);
  app.footer(
      "Quiver files: [vertices] ID SIZE; [edges] ID SIZE; [source]/[range] VERTEX EDGE ORDER;\n"
      "optional [embedding.source]/[embedding.range] VERTEX EDGE OFFSET... (0-based).\n"
      "Graph files: [vertices] ID; [edges] ID SOURCE RANGE.\n"
      "Monoid elements: expr := term ('+' term)*, term := INT '*'? atom | atom,\n"
      "atom := 'I' | 'P(' id ')'.\n"
      "Exit codes: 0 affirmative, 1 negative, 2 usage or input error, 3 inconclusive.");

  std::string file, other, format = "dot", lpa_format = "text", lhs, rhs, class_id;
  bool json = false;
  qq_monoid_eq_options eq = qq_monoid_eq_defaults();

  auto* validate = app.add_subcommand("validate", "Parse and validate a quiver file");
  validate->add_option("file", file, "Quiver file")->required();

  auto* info = app.add_subcommand("info", "Shapes, orders and source classes");
  info->add_option("file", file, "Quiver file")->required();
  info->add_flag("--json", json, "Machine-readable output");

  auto* complete = app.add_subcommand("complete", "Check completeness");
  complete->add_option("file", file, "Quiver file")->required();
  complete->add_flag("--json", json, "Machine-readable output");

  auto* divcheck = app.add_subcommand("divcheck", "Check the divisibility condition");
  divcheck->add_option("file", file, "Quiver file")->required();
  divcheck->add_flag("--json", json, "Machine-readable output");

  auto* weak = app.add_subcommand("weak-iso", "Search for a weak isomorphism");
  weak->add_option("a", file, "First quiver file")->required();
  weak->add_option("b", other, "Second quiver file")->required();
  weak->add_flag("--json", json, "Machine-readable output");

  auto* diagram = app.add_subcommand("diagram", "Emit a quiver diagram");
  diagram->add_option("file", file, "Quiver file")->required();
  diagram->add_option("--format", format, "dot or tikz")->check(CLI::IsMember({"dot", "tikz"}));

  auto* lpa = app.add_subcommand("lpa", "Leavitt path algebra presentation");
  lpa->add_option("file", file, "Quiver file")->required();
  lpa->add_option("--format", lpa_format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));

  auto* lpa_matrix = app.add_subcommand("lpa-matrix", "Relations in block-matrix form");
  lpa_matrix->add_option("file", file, "Quiver file")->required();

  auto* lpa_compare =
      app.add_subcommand("lpa-compare", "Compare with the classical presentation");
  lpa_compare->add_option("file", file, "Quiver file (all blocks of size 1)")->required();
  lpa_compare->add_flag("--json", json, "Machine-readable output");

  auto* monoid = app.add_subcommand("monoid", "Monoid of projective modules");
  monoid->add_option("file", file, "Quiver file")->required();
  monoid->add_flag("--json", json, "Machine-readable output");

  auto* monoid_eq = app.add_subcommand("monoid-eq", "Decide equality of monoid elements");
  monoid_eq->add_option("file", file, "Quiver file")->required();
  monoid_eq->add_option("--lhs", lhs, "Left element, e.g. \"8I\"")->required();
  monoid_eq->add_option("--rhs", rhs, "Right element, e.g. \"12I + 2P(v4)\"")->required();
  monoid_eq->add_option("--depth", eq.depth, "Search levels per side")
      ->check(CLI::Range(0, 64))
      ->capture_default_str();
  monoid_eq->add_option("--max-k", eq.max_k, "Largest cyclic quotient Z/k tried")
      ->check(CLI::Range(1, 1000))
      ->capture_default_str();
  monoid_eq->add_option("--max-m", eq.max_m, "Largest truncation {0..m} tried")
      ->check(CLI::Range(0, 1000))
      ->capture_default_str();
  monoid_eq->add_flag("--json", json, "Machine-readable output");

  auto* verify = app.add_subcommand("verify-thm4", "Verify the witness matrix identities");
  verify->add_option("file", file, "Quiver file")->required();
  verify->add_option("--class", class_id, "Any vertex of the source class");
  verify->add_flag("--json", json, "Machine-readable output");

  auto* from_graph = app.add_subcommand("from-graph", "Graph file to quiver file");
  from_graph->add_option("file", file, "Graph file")->required();

  auto* to_graph = app.add_subcommand("to-graph", "Commutative quiver file to graph file");
  to_graph->add_option("file", file, "Quiver file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return kExitUsage;
  }

  try {
    char* out = nullptr;
    qq_verdict v = QQ_AFFIRMATIVE;
    if (validate->parsed()) {
      auto q = load_quiver(file);
      std::cout << "valid\n";
      return 0;
    }
    if (info->parsed()) {
      auto q = load_quiver(file);
      check(qq_quiver_info(q.get(), json, &out), "");
      return print(out);
    }
    if (complete->parsed()) {
      auto q = load_quiver(file);
      check(qq_quiver_complete(q.get(), json, &v, &out), "");
      return print_verdict(out, v);
    }
    if (divcheck->parsed()) {
      auto q = load_quiver(file);
      check(qq_quiver_divcheck(q.get(), json, &v, &out), "");
      return print_verdict(out, v);
    }
    if (weak->parsed()) {
      auto a = load_quiver(file);
      auto b = load_quiver(other);
      check(qq_quiver_weak_iso(a.get(), b.get(), json, &v, &out), "");
      return print_verdict(out, v);
    }
    if (diagram->parsed()) {
      auto q = load_quiver(file);
      check(qq_quiver_diagram(q.get(), format.c_str(), &out), "");
      return print(out);
    }
    if (lpa->parsed()) {
      auto q = load_quiver(file);
      check(qq_quiver_lpa(q.get(), lpa_format.c_str(), &out), "");
      return print(out);
    }
    if (lpa_matrix->parsed()) {
      auto q = load_quiver(file);
      check(qq_quiver_lpa_matrix(q.get(), &out), "");
      return print(out);
    }
    if (lpa_compare->parsed()) {
      auto q = load_quiver(file);
      check(qq_quiver_lpa_compare(q.get(), json, &v, &out), "");
      return print_verdict(out, v);
    }
    if (monoid->parsed()) {
      auto q = load_quiver(file);
      check(qq_quiver_monoid(q.get(), json, &out), "");
      return print(out);
    }
    if (monoid_eq->parsed()) {
      auto q = load_quiver(file);
      check(qq_quiver_monoid_eq(q.get(), lhs.c_str(), rhs.c_str(), &eq, json, &v, &out), "");
      return print_verdict(out, v);
    }
    if (verify->parsed()) {
      auto q = load_quiver(file);
      const char* cls = verify->count("--class") ? class_id.c_str() : nullptr;
      check(qq_quiver_verify_witnesses(q.get(), cls, json, &v, &out), "");
      return print_verdict(out, v);
    }
    if (from_graph->parsed()) {
      auto g = load_graph(file);
      qq_quiver* q = nullptr;
      check(qq_quiver_from_graph(g.get(), &q), "");
      QuiverPtr owned(q);
      check(qq_quiver_emit(owned.get(), &out), "");
      return print(out);
    }
    if (to_graph->parsed()) {
      auto q = load_quiver(file);
      qq_graph* g = nullptr;
      check(qq_quiver_to_graph(q.get(), &g), "");
      GraphPtr owned(g);
      check(qq_graph_emit(owned.get(), &out), "");
      return print(out);
    }
  } catch (const Failure& f) {
    std::cerr << "qq: " << f.message << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
