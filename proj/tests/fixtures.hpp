// Copyright (c) lcadag contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Shared hand-built instances. Expected values in the tests that use these
// were derived by hand from the definitions (cluster = leaf labels below a
// vertex, lca set = minimal common ancestors, cover edges = inclusion
// without an intermediate member) and are frozen here as the ground truth
// the implementation has to reproduce.
#ifndef LCADAG_TESTS_FIXTURES_HPP
#define LCADAG_TESTS_FIXTURES_HPP

#include <string>
#include <vector>

#include "lcadag/dag.hpp"
#include "lcadag/set_system.hpp"

namespace lcadag::fixtures {

// Three-leaf tree: rho(0) → u(1), c(2); u → a(3), b(4).
inline Dag t3() {
  DagInput in;
  in.vertices = {0, 1, 2, 3, 4};
  in.edges = {{0, 1}, {0, 2}, {1, 3}, {1, 4}};
  in.leaf_labels = {{2, "c"}, {3, "a"}, {4, "b"}};
  return Dag::validate(in);
}

// Single-shortcut triangle: r(0) → m(1) → x(2), plus the shortcut r → x.
inline Dag s1() {
  DagInput in;
  in.vertices = {0, 1, 2};
  in.edges = {{0, 1}, {0, 2}, {1, 2}};
  in.leaf_labels = {{2, "x"}};
  return Dag::validate(in);
}

// Cover digraph of all nonempty subsets of {a,b,c}, singletons relabeled.
// Ids follow canonical member order:
//   {a}=0 {b}=1 {c}=2 {a,b}=3 {a,c}=4 {b,c}=5 {a,b,c}=6.
inline Dag b3() {
  DagInput in;
  in.vertices = {0, 1, 2, 3, 4, 5, 6};
  in.edges = {{3, 0}, {3, 1}, {4, 0}, {4, 2}, {5, 1}, {5, 2}, {6, 3}, {6, 4}, {6, 5}};
  in.leaf_labels = {{0, "a"}, {1, "b"}, {2, "c"}};
  return Dag::validate(in);
}

// The four-element counterexample system:
//   {a} {b} {c} {d} {a,b,c} {b,c,d} {a,b,c,d}.
inline SetSystem c4() {
  return SetSystem::from_labels(
      {"a", "b", "c", "d"},
      {{"a"}, {"b"}, {"c"}, {"d"}, {"a", "b", "c"}, {"b", "c", "d"}, {"a", "b", "c", "d"}});
}

// Cover digraph of c4(), singletons relabeled. Ids by canonical member
// order: {a}=0 {b}=1 {c}=2 {d}=3 {a,b,c}=4 {b,c,d}=5 {a,b,c,d}=6.
inline Dag h4() {
  DagInput in;
  in.vertices = {0, 1, 2, 3, 4, 5, 6};
  in.edges = {{4, 0}, {4, 1}, {4, 2}, {5, 1}, {5, 2}, {5, 3}, {6, 4}, {6, 5}};
  in.leaf_labels = {{0, "a"}, {1, "b"}, {2, "c"}, {3, "d"}};
  return Dag::validate(in);
}

// Small galled tree: rho(0) → p(1), q(2); p, q → h(3); h → x(4);
// p → a(5); q → b(6). The block {rho,p,q,h} is a four-cycle with one source
// and one sink; h is a non-leaf whose cluster is the singleton {x}.
inline Dag gt() {
  DagInput in;
  in.vertices = {0, 1, 2, 3, 4, 5, 6};
  in.edges = {{0, 1}, {0, 2}, {1, 3}, {1, 5}, {2, 3}, {2, 6}, {3, 4}};
  in.leaf_labels = {{4, "x"}, {5, "a"}, {6, "b"}};
  return Dag::validate(in);
}

// Galled-tree-like system: {a} {b} {c} {a,b} {b,c} {a,b,c}.
inline SetSystem cg() {
  return SetSystem::from_labels({"a", "b", "c"},
                                {{"a"}, {"b"}, {"c"}, {"a", "b"}, {"b", "c"}, {"a", "b", "c"}});
}

// Comparability/nesting mismatch: r(0) → u(1), v(2); u → b(3), c(4), d(5);
// v → b, c. The cluster of v is contained in the cluster of u, yet u and v
// are incomparable.
inline Dag pcc_counterexample() {
  DagInput in;
  in.vertices = {0, 1, 2, 3, 4, 5};
  in.edges = {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}};
  in.leaf_labels = {{3, "b"}, {4, "c"}, {5, "d"}};
  return Dag::validate(in);
}

inline LabelSet ls(std::initializer_list<LabelIndex> xs) { return LabelSet(xs); }

}  // namespace lcadag::fixtures

#endif
