// Copyright (c) lcadag contributors.
// SPDX-License-Identifier: Apache-2.0
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "lcadag/lca.hpp"
#include "lcadag/size_index.hpp"

using namespace lcadag;
using fixtures::ls;

TEST_CASE("size index construction and validation") {
  SizeIndex i = SizeIndex::of({2, 1, 2});
  CHECK(i.sizes() == std::vector<int>{1, 2});
  CHECK(!i.requires_one());
  CHECK(i.contains(1));
  CHECK(!i.contains(3));
  CHECK(i.to_string() == "{1,2}");

  SizeIndex j = SizeIndex::with_one({1, 3});
  CHECK(j.requires_one());

  CHECK_THROWS_AS(SizeIndex::of({}), std::invalid_argument);
  CHECK_THROWS_AS(SizeIndex::of({0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(SizeIndex::with_one({2}), std::invalid_argument);

  CHECK(i.feasible_for(1));
  CHECK(SizeIndex::of({4}).feasible_for(4));
  CHECK(!SizeIndex::of({4}).feasible_for(3));
}

TEST_CASE("subset enumeration: order, counting, cap") {
  std::vector<LabelSet> seen;
  for_each_index_subset(3, SizeIndex::of({1, 2}), 1000, [&](const LabelSet& a) {
    seen.push_back(a);
    return true;
  });
  CHECK(seen == std::vector<LabelSet>{ls({0}), ls({1}), ls({2}), ls({0, 1}), ls({0, 2}),
                                      ls({1, 2})});

  CHECK(subset_space_size(3, SizeIndex::of({1, 2})) == 6);
  CHECK(subset_space_size(3, SizeIndex::of({1, 2, 3})) == 7);
  // Sizes beyond the ground set contribute nothing.
  CHECK(subset_space_size(3, SizeIndex::of({1, 9})) == 3);
  CHECK(binomial(6, 3) == 20);
  CHECK(binomial(64, 32) > 1000000000ull);

  try {
    for_each_index_subset(10, SizeIndex::of({5}), 10, [](const LabelSet&) { return true; });
    FAIL("expected ResourceLimit");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ResourceLimit);
  }

  // Early stop.
  int count = 0;
  for_each_index_subset(3, SizeIndex::of({1, 2}), 1000, [&](const LabelSet&) {
    return ++count < 2;
  });
  CHECK(count == 2);
}

TEST_CASE("lca sets on the fixtures, frozen") {
  Dag b3 = fixtures::b3();
  CHECK(lca_set(b3, {"a", "b"}) == std::vector<VertexId>{3});
  CHECK(lca_set(b3, {"a", "c"}) == std::vector<VertexId>{4});
  CHECK(lca_set(b3, {"a", "b", "c"}) == std::vector<VertexId>{6});
  CHECK(lca_set(b3, {"a"}) == std::vector<VertexId>{0});

  Dag h4 = fixtures::h4();
  // {b,c} sits under both triple vertices; neither is below the other.
  CHECK(lca_set(h4, {"b", "c"}) == std::vector<VertexId>{4, 5});
  CHECK(lca_set(h4, {"a", "d"}) == std::vector<VertexId>{6});

  Dag t3 = fixtures::t3();
  CHECK(lca_set(t3, {"a", "b"}) == std::vector<VertexId>{1});
  CHECK(lca_set(t3, {"a", "c"}) == std::vector<VertexId>{0});

  CHECK_THROWS_AS(lca_set(t3, std::vector<std::string>{}), Error);
  CHECK_THROWS_AS(lca_set(t3, {"nope"}), Error);
}

TEST_CASE("unique lca carries the full set when ill-defined") {
  CHECK(unique_lca(fixtures::b3(), {"a", "c"}) == 4);
  try {
    unique_lca(fixtures::h4(), {"b", "c"});
    FAIL("expected NotWellDefined");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotWellDefined);
    CHECK(e.vertices == std::vector<VertexId>{4, 5});
  }
}

TEST_CASE("lca-vertex classification over sizes {1,2}") {
  SUBCASE("T3: every vertex is witnessed") {
    IlcaClassification c = i_lca_vertices(fixtures::t3(), SizeIndex::of({1, 2}));
    CHECK(c.non_lca.empty());
    CHECK(c.witness.at(0) == ls({0, 2}));  // rho: first pair {a,c}
    CHECK(c.witness.at(1) == ls({0, 1}));  // u: {a,b}
    CHECK(c.witness.at(2) == ls({2}));
    CHECK(c.witness.at(3) == ls({0}));
    CHECK(c.witness.at(4) == ls({1}));
  }
  SUBCASE("B3: only the top is unwitnessed") {
    IlcaClassification c = i_lca_vertices(fixtures::b3(), SizeIndex::of({1, 2}));
    CHECK(c.non_lca == std::vector<VertexId>{6});
    CHECK(c.witness.size() == 6);
    CHECK(c.witness.at(3) == ls({0, 1}));
  }
  SUBCASE("B3 with triples: everything witnessed") {
    IlcaClassification c = i_lca_vertices(fixtures::b3(), SizeIndex::of({1, 2, 3}));
    CHECK(c.non_lca.empty());
    CHECK(c.witness.at(6) == ls({0, 1, 2}));
  }
}

TEST_CASE("relevance and the unique-lca property on the fixtures") {
  SizeIndex i12 = SizeIndex::with_one({1, 2});

  CHECK(is_i_lca_relevant(fixtures::t3(), i12).holds);
  CHECK(!is_i_lca_relevant(fixtures::b3(), i12).holds);
  CHECK(is_i_lca_relevant(fixtures::b3(), SizeIndex::of({1, 2, 3})).holds);
  CHECK(is_i_lca_relevant(fixtures::h4(), i12).holds);

  CHECK(has_i_lca_property(fixtures::t3(), i12).holds);
  CHECK(has_i_lca_property(fixtures::t3(), SizeIndex::with_one({1, 2, 3})).holds);
  CHECK(has_i_lca_property(fixtures::b3(), i12).holds);

  SUBCASE("H4 fails the pair property exactly at {b,c}") {
    LcaPropertyResult r = has_i_lca_property(fixtures::h4(), i12);
    CHECK(!r.holds);
    REQUIRE(r.witness.has_value());
    CHECK(*r.witness == ls({1, 2}));
    CHECK(r.witness_lcas == std::vector<VertexId>{4, 5});
  }
  SUBCASE("H4 satisfies the property for sizes avoiding 2") {
    CHECK(has_i_lca_property(fixtures::h4(), SizeIndex::with_one({1, 3})).holds);
    CHECK(has_i_lca_property(fixtures::h4(), SizeIndex::with_one({1, 4})).holds);
  }
  SUBCASE("the property demands a 1-containing index") {
    CHECK_THROWS_AS(has_i_lca_property(fixtures::t3(), SizeIndex::of({2})),
                    std::invalid_argument);
  }
}

TEST_CASE("disconnected single-size classification still works") {
  // Two isolated labeled vertices: {x,y} with no edges. Everything is a
  // {1}-lca vertex, yet the pair {x,y} has an empty ancestor intersection —
  // an empty lca set is simply "not well-defined".
  DagInput in;
  in.vertices = {0, 1};
  in.leaf_labels = {{0, "x"}, {1, "y"}};
  Dag d = Dag::validate(in);
  CHECK(is_i_lca_relevant(d, SizeIndex::of({1})).holds);
  CHECK(lca_set(d, {"x", "y"}).empty());
  LcaPropertyResult r = has_i_lca_property(d, SizeIndex::with_one({1, 2}));
  CHECK(!r.holds);
  REQUIRE(r.witness.has_value());
  CHECK(*r.witness == ls({0, 1}));
  CHECK(r.witness_lcas.empty());
}

TEST_CASE("enumeration cap propagates as a typed error") {
  try {
    i_lca_vertices(fixtures::b3(), SizeIndex::of({1, 2}), 3);
    FAIL("expected ResourceLimit");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ResourceLimit);
  }
}
