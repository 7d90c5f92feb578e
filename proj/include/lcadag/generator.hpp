// Copyright (c) lcadag contributors.
// SPDX-License-Identifier: Apache-2.0
#ifndef LCADAG_GENERATOR_HPP
#define LCADAG_GENERATOR_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "lcadag/dag.hpp"
#include "lcadag/set_system.hpp"

namespace lcadag {

// Deterministic random helper. All derived draws use only the raw
// mt19937_64 stream (no standard-library distributions), so identical seeds
// produce identical instances on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  // Uniform in [0, n); n must be >= 1.
  std::uint64_t below(std::uint64_t n) { return next() % n; }
  // Uniform in [lo, hi] inclusive.
  int range(int lo, int hi);
  bool chance(double p);
  template <typename T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(below(v.size()))];
  }
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i)
      std::swap(v[i - 1], v[static_cast<std::size_t>(below(i))]);
  }

 private:
  std::mt19937_64 engine_;
};

enum class Flavor {
  arbitrary_dag,            // unconstrained labeled DAG
  pcc_dag,                  // comparability ⟺ cluster nesting guaranteed
  property_dag,             // unique-lca property for the requested sizes guaranteed
  tree_like_system,         // hierarchy (no overlapping members)
  galled_tree_like_system,  // closed, no 3-overlap, equal pairwise intersections
  n3o_system,               // no three pairwise overlapping members
  grounded_system,          // arbitrary grounded system
};

struct GenParams {
  std::uint64_t seed = 1;
  int leaf_min = 2, leaf_max = 6;          // |X| range
  int internal_min = 1, internal_max = 8;  // extra internal vertices / extra members
  double edge_density = 0.3;               // edge / decoration probability
  Flavor flavor = Flavor::arbitrary_dag;
  std::vector<int> sizes = {1, 2};         // size index guiding property_dag
};

// Both generators are pure functions of their parameters: identical params
// give identical output. Constrained flavors are built constructively where
// a construction exists and rejection-sampled otherwise, and the promised
// guarantee is re-verified before returning. Throws InfeasibleParams for
// impossible ranges (leaf_min < 1, empty ranges, density outside [0,1], …).
Dag gen_dag(const GenParams& params);
SetSystem gen_system(const GenParams& params);

namespace detail {
// Def-style sequential vertex removal on raw edge structure: removes the
// vertices of `order` one at a time, each time bridging every parent to
// every child of the removed vertex. Kept as an independent oracle for the
// path-based ⊖ implementation; exposed for tests and the corpus laws.
struct RawGraph {
  std::vector<VertexId> vertices;
  std::vector<std::pair<VertexId, VertexId>> edges;
};
RawGraph ominus_sequential(RawGraph g, const std::vector<VertexId>& order);
}  // namespace detail

}  // namespace lcadag

#endif
