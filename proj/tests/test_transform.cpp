// Copyright (c) lcadag contributors.
// SPDX-License-Identifier: Apache-2.0
#include <algorithm>

#include "doctest.h"
#include "fixtures.hpp"
#include "lcadag/generator.hpp"
#include "lcadag/lca.hpp"
#include "lcadag/transform.hpp"

using namespace lcadag;
using fixtures::ls;

namespace {

// Library-independent view of a Dag for comparing against the sequential
// removal oracle.
detail::RawGraph raw_of(const Dag& d) {
  return detail::RawGraph{d.vertex_ids(), d.edge_list()};
}

bool same_graph(const detail::RawGraph& a, const Dag& b) {
  detail::RawGraph bb = raw_of(b);
  detail::RawGraph aa = a;
  std::sort(aa.vertices.begin(), aa.vertices.end());
  std::sort(aa.edges.begin(), aa.edges.end());
  return aa.vertices == bb.vertices && aa.edges == bb.edges;
}

}  // namespace

TEST_CASE("vertex removal bridges through the removed set") {
  SUBCASE("empty removal is the identity") {
    CHECK(ominus(fixtures::b3(), {}) == fixtures::b3());
  }
  SUBCASE("removing a middle vertex of the triangle leaves one edge") {
    Dag r = ominus(fixtures::s1(), {1});
    CHECK(r.vertex_ids() == std::vector<VertexId>{0, 2});
    CHECK(r.edge_list() == std::vector<std::pair<VertexId, VertexId>>{{0, 2}});
  }
  SUBCASE("removing a pair vertex of B3 rewires the top to its leaves") {
    Dag r = ominus(fixtures::b3(), {4});
    CHECK(r.vertex_ids() == std::vector<VertexId>{0, 1, 2, 3, 5, 6});
    CHECK(r.edge_list() ==
          std::vector<std::pair<VertexId, VertexId>>{
              {3, 0}, {3, 1}, {5, 1}, {5, 2}, {6, 0}, {6, 2}, {6, 3}, {6, 5}});
    // The lost cluster is exactly {a,c}.
    CHECK(cluster_system(r) ==
          SetSystem::power_set({"a", "b", "c"}).without(ls({0, 2})));
  }
  SUBCASE("removing the top of B3 deletes it without bridging") {
    Dag r = ominus(fixtures::b3(), {6});
    CHECK(r.vertex_count() == 6);
    CHECK(r.roots() == std::vector<VertexId>{3, 4, 5});
  }
  SUBCASE("removal through a chain of removed vertices") {
    // r(0) → m(1) → n(2) → x(3), remove {m, n}: r → x survives.
    DagInput in;
    in.vertices = {0, 1, 2, 3};
    in.edges = {{0, 1}, {1, 2}, {2, 3}};
    in.leaf_labels = {{3, "x"}};
    Dag r = ominus(Dag::validate(in), {1, 2});
    CHECK(r.edge_list() == std::vector<std::pair<VertexId, VertexId>>{{0, 3}});
  }
}

TEST_CASE("vertex removal error cases") {
  SUBCASE("unknown vertex") {
    try {
      ominus(fixtures::t3(), {99});
      FAIL("expected UnknownVertex");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::UnknownVertex);
    }
  }
  SUBCASE("removing everything") {
    try {
      ominus(fixtures::s1(), {0, 1, 2});
      FAIL("expected RemovesEverything");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::RemovesEverything);
    }
  }
  SUBCASE("stranding an internal vertex at out-degree zero") {
    DagInput in;
    in.vertices = {0, 1};
    in.edges = {{0, 1}};
    in.leaf_labels = {{1, "x"}};
    try {
      ominus(Dag::validate(in), {1});
      FAIL("expected UnlabeledLeaf");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::UnlabeledLeaf);
    }
  }
  SUBCASE("removing one of several leaves is fine") {
    Dag r = ominus(fixtures::t3(), {2});
    CHECK(r.alphabet() == std::vector<std::string>{"a", "b"});
  }
}

TEST_CASE("path-based removal equals sequential removal in every order") {
  auto check_orders = [](const Dag& g, std::vector<VertexId> w) {
    Dag path_based = ominus(g, w);
    std::sort(w.begin(), w.end());
    do {
      detail::RawGraph seq = detail::ominus_sequential(raw_of(g), w);
      CAPTURE(w);
      CHECK(same_graph(seq, path_based));
    } while (std::next_permutation(w.begin(), w.end()));
  };
  check_orders(fixtures::b3(), {3, 4});
  check_orders(fixtures::b3(), {3, 4, 5});
  check_orders(fixtures::b3(), {6, 4});
  check_orders(fixtures::gt(), {1, 2, 3});
  check_orders(fixtures::s1(), {1});
}

TEST_CASE("preservation report between B3 and B3 minus a pair vertex") {
  SizeIndex i12 = SizeIndex::with_one({1, 2});
  Dag b3 = fixtures::b3();

  SUBCASE("removing the non-lca top keeps everything") {
    PreservationReport r = verify_preservation(b3, ominus(b3, {6}), i12);
    CHECK(r.s0.pass);
    CHECK(r.s1.pass);
    CHECK(r.s2.pass);
    CHECK(r.s3.pass);
    CHECK(r.s4.pass);
    CHECK(r.all());
  }
  SUBCASE("removing a pair vertex breaks exactly the lca flag") {
    PreservationReport r = verify_preservation(b3, ominus(b3, {3}), i12);
    CHECK(r.s0.pass);
    CHECK(r.s1.pass);
    CHECK(r.s2.pass);
    CHECK(r.s3.pass);
    CHECK(!r.s4.pass);
    REQUIRE(r.s4.witness.has_value());
    CHECK(r.s4.witness->labels == std::vector<std::string>{"a", "b"});
  }
  SUBCASE("unrelated alphabets are rejected") {
    CHECK_THROWS_AS(verify_preservation(b3, fixtures::gt(), i12), Error);
  }
  SUBCASE("a transform that invents vertices fails s2") {
    DagInput in;
    in.vertices = {0, 1, 2, 3, 4, 5, 6, 7};
    in.edges = {{3, 0}, {3, 1}, {4, 0}, {4, 2}, {5, 1}, {5, 2},
                {6, 3}, {6, 4}, {6, 5}, {7, 6}};
    in.leaf_labels = {{0, "a"}, {1, "b"}, {2, "c"}};
    PreservationReport r = verify_preservation(b3, Dag::validate(in), i12);
    CHECK(!r.s2.pass);
    REQUIRE(r.s2.witness.has_value());
    CHECK(r.s2.witness->vertices == std::vector<VertexId>{7});
  }
}

TEST_CASE("simplification of B3 over sizes {1,2}, fully frozen") {
  SizeIndex i12 = SizeIndex::with_one({1, 2});
  SimplificationResult r = simplify(fixtures::b3(), i12);

  CHECK(r.removed == std::vector<VertexId>{6});
  CHECK(r.uniqueness_certified);
  CHECK(r.reduced.vertex_ids() == std::vector<VertexId>{0, 1, 2, 3, 4, 5});
  CHECK(r.reduced == r.reduced_shortcut_free);
  CHECK(cluster_system(r.reduced) ==
        SetSystem::power_set({"a", "b", "c"}).without(ls({0, 1, 2})));
  CHECK(r.cluster_diff == std::vector<LabelSet>{ls({0, 1, 2})});

  CHECK(is_i_lca_relevant(r.reduced, i12).holds);
  CHECK(has_i_lca_property(r.reduced, i12).holds);
  CHECK(is_regular(r.reduced_shortcut_free).holds);
  CHECK(is_i_ary(cluster_system(r.reduced), i12).holds);

  PreservationReport p = verify_preservation(fixtures::b3(), r.reduced, i12);
  CHECK(p.all());
}

TEST_CASE("simplification is the identity on already-relevant graphs") {
  SizeIndex i12 = SizeIndex::with_one({1, 2});

  SimplificationResult t = simplify(fixtures::t3(), i12);
  CHECK(t.removed.empty());
  CHECK(t.reduced == fixtures::t3());
  CHECK(t.cluster_diff.empty());
  CHECK(t.uniqueness_certified);

  // H4 is relevant but lacks the unique-lca property: nothing is removed
  // and no uniqueness certificate can be issued.
  SimplificationResult h = simplify(fixtures::h4(), i12);
  CHECK(h.removed.empty());
  CHECK(h.reduced == fixtures::h4());
  CHECK(!h.uniqueness_certified);
}

TEST_CASE("simplification strips shortcuts in its shortcut-free result") {
  SizeIndex i1 = SizeIndex::with_one({1});
  // S1 for sizes {1}: m(1) and r(0) are no singleton's lca (leaf x is its
  // own), so W = {0,1} — removing them leaves the single leaf.
  SimplificationResult s = simplify(fixtures::s1(), i1);
  CHECK(s.removed == std::vector<VertexId>{0, 1});
  CHECK(s.reduced.vertex_count() == 1);

  // A graph that keeps its shortcut carrier: r(0) → m(1) → x(2), r → y(3),
  // m → y, r → x (shortcut). For sizes {1,2}: r = lca{x,y}… build and check
  // the shortcut-free part differs from the reduced part.
  DagInput in;
  in.vertices = {0, 1, 2, 3};
  in.edges = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}};
  in.leaf_labels = {{2, "x"}, {3, "y"}};
  Dag g = Dag::validate(in);
  // (0,2) and (0,3) are shortcuts (x,y ≺ m ≺ r).
  CHECK(g.shortcuts() ==
        std::vector<std::pair<VertexId, VertexId>>{{0, 2}, {0, 3}});
  SizeIndex i12 = SizeIndex::with_one({1, 2});
  SimplificationResult r = simplify(g, i12);
  // m = lca{x,y}; r is no subset's unique lca (same cluster as m, above it).
  CHECK(r.removed == std::vector<VertexId>{0});
  CHECK(r.reduced.edge_list() ==
        std::vector<std::pair<VertexId, VertexId>>{{1, 2}, {1, 3}});
  CHECK(r.reduced == r.reduced_shortcut_free);
}

TEST_CASE("simplification demands a 1-containing index") {
  CHECK_THROWS_AS(simplify(fixtures::b3(), SizeIndex::of({2})), std::invalid_argument);
}
