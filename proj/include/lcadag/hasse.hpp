// Copyright (c) lcadag contributors.
// SPDX-License-Identifier: Apache-2.0
#ifndef LCADAG_HASSE_HPP
#define LCADAG_HASSE_HPP

#include <cstdint>
#include <vector>

#include "lcadag/dag.hpp"
#include "lcadag/set_system.hpp"
#include "lcadag/size_index.hpp"

namespace lcadag {

// Cover digraph of a set system under ⊆: one vertex per member (vertex id =
// position in canonical member order), an edge A → B iff B ⊊ A with no
// member strictly between. In `dag` the leaves (inclusion-minimal members)
// are labeled with the rendered set text, so its clusters are generally NOT
// the original members; use `singleton_relabeled` for that.
struct HasseDag {
  Dag dag;
  std::vector<LabelSet> member_of;  // vertex id (by index) → member
};
// Throws EmptySystem when the system has no members.
HasseDag build_hasse(const SetSystem& sys);

// The cover digraph with every singleton leaf {x} relabeled to the plain
// label x. Requires every inclusion-minimal member to be a singleton and the
// system to be grounded, otherwise throws NotGrounded. For a grounded system
// the clusters of the result are exactly the members again.
Dag singleton_relabeled_hasse(const SetSystem& sys);

enum class RealizeDemand {
  property,  // result has the unique-lca property for the index
  relevant,  // additionally every vertex is an lca of some witness subset
};

// Builds a DAG realizing the system as its cluster system via the relabeled
// cover digraph. Checks hypotheses first: NotGrounded when the system is not
// grounded; NotPreIAry when some subset lacks a unique minimal superset;
// additionally for `relevant`, NotIAry when some member is no subset's
// unique minimal superset. The returned DAG always satisfies the demanded
// lca guarantees (verified internally).
Dag realize_with_property(const SetSystem& sys, const SizeIndex& index, RealizeDemand demand,
                          std::uint64_t cap = default_enumeration_cap());

}  // namespace lcadag

#endif
