// Copyright (c) lcadag contributors.
// SPDX-License-Identifier: Apache-2.0
#ifndef LCADAG_TRANSFORM_HPP
#define LCADAG_TRANSFORM_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "lcadag/dag.hpp"
#include "lcadag/size_index.hpp"

namespace lcadag {

// G ⊖ W: removes the vertices in `remove` and keeps an edge (p, q) between
// survivors precisely when the original has a directed p→q path all of whose
// interior vertices were removed. Equivalent to removing the vertices one at
// a time (in any order) while bridging each parent to each child; the result
// is order-independent. ∅ is the identity. Throws UnknownVertex for ids
// outside the graph, RemovesEverything when nothing would survive, and
// validation errors when the survivors do not form a labeled DAG (e.g. an
// unlabeled vertex is stranded at out-degree 0 after removing leaves).
Dag ominus(const Dag& dag, const std::vector<VertexId>& remove);

struct SimplificationResult {
  std::vector<VertexId> removed;       // W: the vertices that are no subset's unique lca
  Dag reduced;                         // G ⊖ W (== G when W = ∅)
  Dag reduced_shortcut_free;           // (G ⊖ W)⁻
  std::vector<LabelSet> cluster_diff;  // clusters of G that the result lost
  bool uniqueness_certified = false;   // input had the unique-lca property for the index
};
// Removes exactly the vertices that are not lca vertices for the index.
// The result is always lca-relevant for the index (every surviving vertex is
// a witness's unique lca). When the input has the unique-lca property, the
// result's clusters are exactly the witnessed members of the input's cluster
// system, the shortcut-free result is the cover digraph of those clusters
// (checked internally), and W is the unique vertex set with these
// preservation guarantees. Requires index.requires_one().
SimplificationResult simplify(const Dag& dag, const SizeIndex& index,
                              std::uint64_t cap = default_enumeration_cap());

struct PreservationFlag {
  bool pass = false;
  std::optional<Witness> witness;
};
// The five preservation guarantees of lca-respecting vertex removal,
// checked extensionally between an original and a transformed DAG:
//   s0  clusters of the result form a subset of the original's, and every
//       shared vertex keeps its cluster;
//   s1  same leaves with the same labels;
//   s2  no new vertices;
//   s3  strict order agrees on every shared pair;
//   s4  every subset (size in index) with a well-defined lca in the original
//       keeps that exact lca in the result.
// Both DAGs must be over the same alphabet (LabelMismatch otherwise).
struct PreservationReport {
  PreservationFlag s0, s1, s2, s3, s4;
  bool all() const { return s0.pass && s1.pass && s2.pass && s3.pass && s4.pass; }
};
PreservationReport verify_preservation(const Dag& original, const Dag& transformed,
                                       const SizeIndex& index,
                                       std::uint64_t cap = default_enumeration_cap());

}  // namespace lcadag

#endif
