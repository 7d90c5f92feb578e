// Copyright (c) lcadag contributors.
// SPDX-License-Identifier: Apache-2.0
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "fixtures.hpp"
#include "lcadag/io.hpp"

using namespace lcadag;
using fixtures::ls;

namespace {

std::string slurp(const std::string& name) {
  std::ifstream f(std::string(LCADAG_FIXTURES_DIR) + "/" + name);
  REQUIRE_MESSAGE(f.good(), "missing fixture file: ", name);
  std::ostringstream out;
  out << f.rdbuf();
  return out.str();
}

}  // namespace

TEST_CASE("dag documents round-trip through parse and serialize") {
  for (const char* name : {"t3.json", "s1.json", "b3.json", "h4.json", "gt.json"}) {
    CAPTURE(name);
    DagDocument doc = parse_dag_document(slurp(name));
    std::string canon = serialize(doc);
    DagDocument again = parse_dag_document(canon);
    CHECK(again == doc);
    // Canonical form is a fixpoint.
    CHECK(serialize(again) == canon);
  }
}

TEST_CASE("system documents round-trip through parse and serialize") {
  for (const char* name : {"c4.json", "cg.json"}) {
    CAPTURE(name);
    SystemDocument doc = parse_system_document(slurp(name));
    std::string canon = serialize(doc);
    SystemDocument again = parse_system_document(canon);
    CHECK(again == doc);
    CHECK(serialize(again) == canon);
  }
}

TEST_CASE("the shipped fixtures parse to the in-memory fixtures") {
  CHECK(parse_dag_document(slurp("t3.json")).dag == fixtures::t3());
  CHECK(parse_dag_document(slurp("s1.json")).dag == fixtures::s1());
  CHECK(parse_dag_document(slurp("b3.json")).dag == fixtures::b3());
  CHECK(parse_dag_document(slurp("h4.json")).dag == fixtures::h4());
  CHECK(parse_dag_document(slurp("gt.json")).dag == fixtures::gt());
  CHECK(parse_system_document(slurp("c4.json")).system == fixtures::c4());
  CHECK(parse_system_document(slurp("cg.json")).system == fixtures::cg());
}

TEST_CASE("edge-list text parses by first appearance") {
  DagDocument doc = parse_dag_document(slurp("t3.txt"));
  CHECK(doc.dag == fixtures::t3());

  // Inline variant, slash-separated pairs and no leaves line: sinks get
  // their names as labels.
  DagDocument d2 = parse_dag_document("rho u / rho c\nu a\nu b\n");
  CHECK(d2.dag == fixtures::t3());
}

TEST_CASE("text parse errors carry positions") {
  SUBCASE("odd token count") {
    try {
      parse_dag_document("rho u c\n");
      FAIL("expected SyntaxError");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::SyntaxError);
      CHECK(e.line == 1);
    }
  }
  SUBCASE("second leaves line") {
    try {
      parse_dag_document("r x\nleaves: x\nleaves: x\n");
      FAIL("expected SyntaxError");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::SyntaxError);
      CHECK(e.line == 3);
    }
  }
  SUBCASE("empty input") {
    CHECK_THROWS_AS(parse_dag_document("   \n"), Error);
  }
}

TEST_CASE("json parse errors and strictness") {
  SUBCASE("malformed json") {
    try {
      parse_dag_document("{ \"vertices\": [");
      FAIL("expected SyntaxError");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::SyntaxError);
    }
  }
  SUBCASE("unknown keys are rejected") {
    CHECK_THROWS_AS(
        parse_dag_document(
            R"({"format_version":1,"vertices":[{"id":0,"label":"x"}],"edges":[],"extra":1})"),
        Error);
  }
  SUBCASE("unsupported version") {
    CHECK_THROWS_AS(
        parse_dag_document(R"({"format_version":2,"vertices":[{"id":0,"label":"x"}],"edges":[]})"),
        Error);
  }
  SUBCASE("duplicate vertex ids") {
    try {
      parse_dag_document(
          R"({"format_version":1,"vertices":[{"id":0,"label":"x"},{"id":0}],"edges":[]})");
      FAIL("expected DuplicateVertex");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::DuplicateVertex);
    }
  }
  SUBCASE("duplicate system members") {
    try {
      parse_system_document(
          R"({"format_version":1,"ground":["a","b"],"sets":[["a"],["a"]]})");
      FAIL("expected DuplicateMember");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::DuplicateMember);
    }
  }
  SUBCASE("duplicate label inside one set") {
    try {
      parse_system_document(
          R"({"format_version":1,"ground":["a","b"],"sets":[["a","a"]]})");
      FAIL("expected DuplicateLabel");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::DuplicateLabel);
    }
  }
  SUBCASE("duplicate ground labels") {
    try {
      parse_system_document(
          R"({"format_version":1,"ground":["a","a"],"sets":[["a"]]})");
      FAIL("expected DuplicateLabel");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::DuplicateLabel);
    }
  }
}

TEST_CASE("dot export is deterministic and styled, frozen") {
  SUBCASE("plain tree") {
    CHECK(export_dot(fixtures::t3()) ==
          "digraph dag {\n"
          "  rankdir=TB;\n"
          "  node [shape=ellipse];\n"
          "  v0 [label=\"v0\"];\n"
          "  v1 [label=\"v1\"];\n"
          "  v2 [label=\"c\"];\n"
          "  v3 [label=\"a\"];\n"
          "  v4 [label=\"b\"];\n"
          "  v0 -> v1;\n"
          "  v0 -> v2;\n"
          "  v1 -> v3;\n"
          "  v1 -> v4;\n"
          "}\n");
  }
  SUBCASE("shortcuts come out dashed") {
    CHECK(export_dot(fixtures::s1()) ==
          "digraph dag {\n"
          "  rankdir=TB;\n"
          "  node [shape=ellipse];\n"
          "  v0 [label=\"v0\"];\n"
          "  v1 [label=\"v1\"];\n"
          "  v2 [label=\"x\"];\n"
          "  v0 -> v1;\n"
          "  v0 -> v2 [style=dashed];\n"
          "  v1 -> v2;\n"
          "}\n");
  }
  SUBCASE("clusters and highlighting") {
    DotOptions opt;
    opt.show_clusters = true;
    opt.highlight = {6};
    std::string dot = export_dot(fixtures::b3(), opt);
    CHECK(dot.find("v6 [label=\"v6\\n{a,b,c}\", style=filled, fillcolor=\"#a6cee3\"];") !=
          std::string::npos);
    CHECK(dot.find("v0 [label=\"a\\n{a}\"];") != std::string::npos);
  }
}
