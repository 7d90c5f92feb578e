// Copyright (c) lcadag contributors.
// SPDX-License-Identifier: Apache-2.0
#ifndef LCADAG_LCA_HPP
#define LCADAG_LCA_HPP

#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lcadag/dag.hpp"
#include "lcadag/size_index.hpp"
#include "lcadag/types.hpp"

namespace lcadag {

// The ⪯-minimal common ancestors of the leaves named by `a`, ascending by
// id. `a` is a set of indices into dag.alphabet() (or label strings in the
// convenience overloads). Throws EmptySet on ∅ and UnknownLabel on labels
// outside the alphabet. Empty exactly when no vertex lies above all of `a`
// (possible only in a disconnected graph).
std::vector<VertexId> lca_set(const Dag& dag, const LabelSet& a);
std::vector<VertexId> lca_set(const Dag& dag, const std::vector<std::string>& labels);
std::vector<VertexId> lca_set(const Dag& dag, std::initializer_list<const char*> labels);

// The unique minimal common ancestor; throws Error(NotWellDefined) carrying
// the full lca set in `vertices` when it is not a singleton.
VertexId unique_lca(const Dag& dag, const LabelSet& a);
VertexId unique_lca(const Dag& dag, const std::vector<std::string>& labels);
VertexId unique_lca(const Dag& dag, std::initializer_list<const char*> labels);

// Classification of every vertex as "lca vertex for the size index" or not.
// witness[v] is the first subset (canonical enumeration order) whose unique
// lca is v; non_lca lists the vertices that are no subset's unique lca, in
// ascending order. Enumeration covers the subsets of the alphabet with size
// in the index; sizes beyond |X| contribute nothing.
struct IlcaClassification {
  std::map<VertexId, LabelSet> witness;
  std::vector<VertexId> non_lca;
};
IlcaClassification i_lca_vertices(const Dag& dag, const SizeIndex& index,
                                  std::uint64_t cap = default_enumeration_cap());

struct RelevanceResult {
  bool holds = false;
  std::vector<VertexId> non_lca;  // empty iff holds
};
// Every vertex is the unique lca of some subset with size in the index.
RelevanceResult is_i_lca_relevant(const Dag& dag, const SizeIndex& index,
                                  std::uint64_t cap = default_enumeration_cap());

struct LcaPropertyResult {
  bool holds = false;
  std::optional<LabelSet> witness;     // first subset whose lca set is not a singleton
  std::vector<VertexId> witness_lcas;  // its full lca set
};
// Every subset with size in the index has a well-defined (unique) lca.
// Requires index.requires_one() — the property is defined for 1-containing
// indices; throws std::invalid_argument otherwise.
LcaPropertyResult has_i_lca_property(const Dag& dag, const SizeIndex& index,
                                     std::uint64_t cap = default_enumeration_cap());

}  // namespace lcadag

#endif
