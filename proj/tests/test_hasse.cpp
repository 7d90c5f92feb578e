// Copyright (c) lcadag contributors.
// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"
#include "fixtures.hpp"
#include "lcadag/hasse.hpp"
#include "lcadag/lca.hpp"

using namespace lcadag;
using fixtures::ls;

TEST_CASE("cover digraph of the three-element power set, frozen") {
  HasseDag h = build_hasse(SetSystem::power_set({"a", "b", "c"}));
  CHECK(h.dag.vertex_ids() == std::vector<VertexId>{0, 1, 2, 3, 4, 5, 6});
  CHECK(h.member_of[0] == ls({0}));
  CHECK(h.member_of[3] == ls({0, 1}));
  CHECK(h.member_of[6] == ls({0, 1, 2}));
  CHECK(h.dag.edge_list() ==
        std::vector<std::pair<VertexId, VertexId>>{
            {3, 0}, {3, 1}, {4, 0}, {4, 2}, {5, 1}, {5, 2}, {6, 3}, {6, 4}, {6, 5}});
  // Raw leaves are labeled with set text, so its alphabet is not {a,b,c}.
  CHECK(h.dag.alphabet() == std::vector<std::string>{"{a}", "{b}", "{c}"});
}

TEST_CASE("cover edges skip nothing and collapse chains correctly") {
  // {a} ⊂ {a,b} ⊂ {a,b,c}: no direct edge from top to bottom.
  SetSystem s = SetSystem::from_labels({"a", "b", "c"}, {{"a"}, {"a", "b"}, {"a", "b", "c"}});
  HasseDag h = build_hasse(s);
  CHECK(h.dag.edge_list() ==
        std::vector<std::pair<VertexId, VertexId>>{{1, 0}, {2, 1}});
}

TEST_CASE("singleton relabeling reproduces the fixtures") {
  Dag b3 = singleton_relabeled_hasse(SetSystem::power_set({"a", "b", "c"}));
  CHECK(b3 == fixtures::b3());

  Dag h4 = singleton_relabeled_hasse(fixtures::c4());
  CHECK(h4 == fixtures::h4());

  // Round trip: for a grounded system the clusters are the members again.
  CHECK(cluster_system(b3) == SetSystem::power_set({"a", "b", "c"}));
  CHECK(cluster_system(h4) == fixtures::c4());
}

TEST_CASE("relabeled cover digraphs are shortcut-free, nesting-faithful, regular") {
  for (const SetSystem& sys :
       {SetSystem::power_set({"a", "b", "c"}), fixtures::c4(), fixtures::cg(),
        cluster_system(fixtures::gt())}) {
    Dag d = singleton_relabeled_hasse(sys);
    CAPTURE(sys.ground().size());
    CHECK(d.shortcuts().empty());
    CHECK(is_pcc(d).holds);
    CHECK(is_regular(d).holds);
    CHECK(is_phylogenetic(d).holds);
    CHECK(cluster_system(d) == sys);
  }
}

TEST_CASE("relabeling requires singleton minima") {
  SUBCASE("non-singleton minimal member") {
    SetSystem s = SetSystem::from_labels({"a", "b"}, {{"a", "b"}});
    CHECK(build_hasse(s).dag.vertex_count() == 1);  // raw form is fine
    try {
      singleton_relabeled_hasse(s);
      FAIL("expected NotGrounded");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotGrounded);
    }
  }
  SUBCASE("missing singleton elsewhere") {
    SetSystem s = SetSystem::from_labels({"a", "b"}, {{"a"}, {"a", "b"}});
    try {
      singleton_relabeled_hasse(s);
      FAIL("expected NotGrounded");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotGrounded);
    }
  }
  SUBCASE("empty member") {
    SetSystem s(std::vector<std::string>{"a"}, std::vector<LabelSet>{ls({}), ls({0})});
    CHECK_THROWS_AS(singleton_relabeled_hasse(s), Error);
  }
  SUBCASE("no members at all") {
    SetSystem s(std::vector<std::string>{"a"}, std::vector<LabelSet>{});
    try {
      build_hasse(s);
      FAIL("expected EmptySystem");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::EmptySystem);
    }
  }
}

TEST_CASE("realization checks hypotheses in order and delivers the guarantee") {
  SizeIndex i12 = SizeIndex::with_one({1, 2});

  SUBCASE("missing unique minimal superset → NotPreIAry") {
    try {
      realize_with_property(fixtures::c4(), i12, RealizeDemand::property);
      FAIL("expected NotPreIAry");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotPreIAry);
    }
  }
  SUBCASE("pre-check ok but unwitnessed member → NotIAry for the relevant demand") {
    SetSystem p = SetSystem::power_set({"a", "b", "c"});
    CHECK(has_i_lca_property(realize_with_property(p, i12, RealizeDemand::property), i12)
              .holds);
    try {
      realize_with_property(p, i12, RealizeDemand::relevant);
      FAIL("expected NotIAry");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotIAry);
    }
  }
  SUBCASE("fully witnessed system → relevant realization") {
    SetSystem s = SetSystem::power_set({"a", "b", "c"}).without(ls({0, 2}));
    Dag d = realize_with_property(s, i12, RealizeDemand::relevant);
    CHECK(cluster_system(d) == s);
    CHECK(has_i_lca_property(d, i12).holds);
    CHECK(is_i_lca_relevant(d, i12).holds);
  }
  SUBCASE("ungrounded input → NotGrounded") {
    SetSystem s = SetSystem::from_labels({"a", "b"}, {{"a"}, {"a", "b"}});
    try {
      realize_with_property(s, i12, RealizeDemand::property);
      FAIL("expected NotGrounded");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotGrounded);
    }
  }
}
