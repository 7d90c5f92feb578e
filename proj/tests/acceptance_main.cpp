// Copyright (c) lcadag contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Acceptance suite: one pass/fail line per criterion, with wall-clock time.
// Returns nonzero when any criterion fails.
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "lcadag/corpus.hpp"
#include "lcadag/dag.hpp"
#include "lcadag/errors.hpp"
#include "lcadag/hasse.hpp"
#include "lcadag/io.hpp"
#include "lcadag/lca.hpp"
#include "lcadag/set_system.hpp"
#include "lcadag/size_index.hpp"
#include "lcadag/transform.hpp"

using namespace lcadag;

namespace {

int g_failures = 0;

std::string fixture_path(const std::string& name) {
  return std::string(LCADAG_FIXTURES_DIR) + "/" + name;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  std::ostringstream out;
  out << f.rdbuf();
  return out.str();
}

// Collects the first failed expectation of a criterion body.
struct Check {
  bool ok = true;
  std::string reason;
  void expect(bool condition, const std::string& what) {
    if (ok && !condition) {
      ok = false;
      reason = what;
    }
  }
};

void criterion(int number, const std::string& title, double limit_ms,
               const std::function<void(Check&)>& body) {
  Check check;
  auto start = std::chrono::steady_clock::now();
  try {
    body(check);
  } catch (const std::exception& e) {
    check.expect(false, std::string("unexpected exception: ") + e.what());
  }
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                        start)
                  .count();
  if (check.ok && limit_ms > 0 && ms > limit_ms) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "took %.1f ms, limit %.0f ms", ms, limit_ms);
    check.expect(false, buf);
  }
  if (check.ok) {
    std::printf("[PASS] %2d. %s (%.1f ms)\n", number, title.c_str(), ms);
  } else {
    ++g_failures;
    std::printf("[FAIL] %2d. %s (%.1f ms)\n", number, title.c_str(), ms);
    std::istringstream lines(check.reason);
    std::string line;
    while (std::getline(lines, line)) std::printf("       %s\n", line.c_str());
  }
  std::fflush(stdout);
}

void run_corpus(Check& check, const std::vector<std::string>& laws, int trials,
                std::uint64_t seed) {
  GenParams params;
  params.seed = seed;
  CorpusReport report = check_corpus(laws, params, trials);
  check.expect(report.all_passed(), report.to_text());
}

std::optional<std::string> run_cli(const std::string& args, std::string& output) {
  std::string cmd = std::string("\"") + LCADAG_CLI_PATH + "\" " + args;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return "popen failed for: " + cmd;
  output.clear();
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) output.append(buf, n);
  int status = pclose(pipe);
  if (!WIFEXITED(status) || WEXITSTATUS(status) != 0)
    return "cli exited with status " + std::to_string(WEXITSTATUS(status)) + ": " + cmd;
  return std::nullopt;
}

}  // namespace

int main() {
  const SizeIndex idx12 = SizeIndex::with_one({1, 2});

  criterion(1, "cube reduction: removing the top of the full power-set order", 1000,
            [&](Check& c) {
    Dag b3 = parse_dag_document(slurp(fixture_path("b3.json"))).dag;
    SimplificationResult r = simplify(b3, idx12);
    c.expect(r.removed == std::vector<VertexId>{6}, "removed set is not exactly the root");
    SetSystem full = SetSystem::power_set({"a", "b", "c"});
    SetSystem expected = full.without(full.to_index_set({"a", "b", "c"}));
    c.expect(cluster_system(r.reduced) == expected,
             "clusters of the reduction are not the power set minus the ground set");
    c.expect(is_regular(r.reduced_shortcut_free).holds, "reduction is not regular");
    c.expect(is_i_lca_relevant(r.reduced_shortcut_free, idx12).holds,
             "reduction is not relevant for sizes {1,2}");
    c.expect(has_i_lca_property(r.reduced_shortcut_free, idx12).holds,
             "reduction lacks the unique-lca property for sizes {1,2}");
    c.expect(is_i_ary(cluster_system(r.reduced), idx12).holds,
             "clusters of the reduction are not fully witnessed for sizes {1,2}");
    c.expect(r.uniqueness_certified, "uniqueness was not certified");
  });

  criterion(2, "four-leaf system: grounded and clustering yet no unique minimal supersets",
            1000, [&](Check& c) {
    SetSystem c4 = parse_system_document(slurp(fixture_path("c4.json"))).system;
    SystemFlags flags = validate_system(c4);
    c.expect(flags.grounded, "system is not grounded");
    c.expect(flags.clustering, "system is not a clustering system");
    PreAryResult pre = is_pre_i_ary(c4, idx12);
    c.expect(!pre.holds, "system unexpectedly has unique minimal supersets");
    c.expect(pre.witness.has_value() && *pre.witness == c4.to_index_set({"b", "c"}),
             "witness subset is not {b,c}");
    std::vector<LabelSet> expected = {c4.to_index_set({"a", "b", "c"}),
                                      c4.to_index_set({"b", "c", "d"})};
    c.expect(pre.witness_minimals == expected,
             "minimal supersets of {b,c} are not {a,b,c} and {b,c,d}");
  });

  criterion(3, "four-leaf network: relevance without the unique-lca property", 1000,
            [&](Check& c) {
    Dag h4 = parse_dag_document(slurp(fixture_path("h4.json"))).dag;
    c.expect(is_i_lca_relevant(h4, idx12).holds, "graph is not relevant for sizes {1,2}");
    LcaPropertyResult prop = has_i_lca_property(h4, idx12);
    c.expect(!prop.holds, "graph unexpectedly has the unique-lca property for sizes {1,2}");
    LabelSet bc = cluster_system(h4).to_index_set({"b", "c"});
    c.expect(prop.witness.has_value() && *prop.witness == bc, "witness subset is not {b,c}");
    c.expect(has_i_lca_property(h4, SizeIndex::with_one({1, 3})).holds,
             "unique-lca property fails for sizes {1,3}");
    c.expect(has_i_lca_property(h4, SizeIndex::with_one({1, 4})).holds,
             "unique-lca property fails for sizes {1,4}");
  });

  criterion(4, "preservation suite: random removals of non-lca vertices", 60000,
            [&](Check& c) { run_corpus(c, {"ominus-preservation"}, 500, 41); });

  criterion(5, "equivalence suite: unique lcas versus unique minimal supersets", 0,
            [&](Check& c) { run_corpus(c, {"pcc-property-equivalence"}, 300, 42); });

  criterion(6, "uniqueness suite: exhaustive sweep over candidate removal sets", 120000,
            [&](Check& c) { run_corpus(c, {"simplify-unique-w"}, 200, 43); });

  criterion(7, "shape suite: reductions of hierarchy-like and galled-tree-like inputs", 0,
            [&](Check& c) { run_corpus(c, {"simplify-tree", "simplify-galled"}, 200, 44); });

  criterion(8, "micro-suites: shortcuts, connectivity, property kept, full witnessing", 0,
            [&](Check& c) {
    run_corpus(c,
               {"shortcut-removal", "shortcut-single-delete", "property-implies-connected",
                "ominus-keeps-property", "n3o-full-subsystem",
                "relevant-shortcut-free-regular"},
               300, 45);
  });

  criterion(9, "order independence of sequential vertex removal", 0,
            [&](Check& c) { run_corpus(c, {"ominus-order-independence"}, 300, 46); });

  criterion(10, "cli round-trip and frozen graphviz output", 0, [&](Check& c) {
    for (const char* name : {"t3.json", "s1.json", "b3.json", "h4.json", "gt.json", "t3.txt"}) {
      DagDocument doc = parse_dag_document(slurp(fixture_path(name)));
      DagDocument again = parse_dag_document(serialize(doc));
      c.expect(again == doc, std::string("dag round-trip failed for ") + name);
    }
    for (const char* name : {"c4.json", "cg.json"}) {
      SystemDocument doc = parse_system_document(slurp(fixture_path(name)));
      SystemDocument again = parse_system_document(serialize(doc));
      c.expect(again == doc, std::string("system round-trip failed for ") + name);
    }
    std::string dot;
    std::optional<std::string> err = run_cli(
        "simplify \"" + fixture_path("b3.json") + "\" --sizes 1,2 --dot", dot);
    c.expect(!err, err.value_or(""));
    std::string golden = slurp(fixture_path("golden/b3_simplify.dot"));
    c.expect(dot == golden, "cli graphviz output differs from the golden file");
  });

  std::printf("%d/10 criteria passed\n", 10 - g_failures);
  return g_failures == 0 ? 0 : 1;
}
