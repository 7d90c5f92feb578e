// Copyright (c) lcadag contributors.
// SPDX-License-Identifier: Apache-2.0
#include "lcadag/hasse.hpp"

#include <stdexcept>

#include "lcadag/errors.hpp"
#include "lcadag/lca.hpp"

namespace lcadag {

namespace {

// Cover edges of ⊆ on the canonical member list: i → j iff m[j] ⊊ m[i] with
// no member strictly between.
std::vector<std::pair<VertexId, VertexId>> cover_edges(const std::vector<LabelSet>& ms) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    for (std::size_t j = 0; j < ms.size(); ++j) {
      if (i == j || ms[i] == ms[j] || !is_subset(ms[j], ms[i])) continue;
      bool direct = true;
      for (const LabelSet& between : ms) {
        if (between != ms[i] && between != ms[j] && is_subset(ms[j], between) &&
            is_subset(between, ms[i])) {
          direct = false;
          break;
        }
      }
      if (direct) edges.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>(j));
    }
  }
  return edges;
}

}  // namespace

HasseDag build_hasse(const SetSystem& sys) {
  if (sys.members().empty()) {
    throw Error(ErrorKind::EmptySystem, "a cover digraph needs at least one member");
  }
  const auto& ms = sys.members();
  DagInput in;
  for (std::size_t i = 0; i < ms.size(); ++i) in.vertices.push_back(static_cast<VertexId>(i));
  in.edges = cover_edges(ms);
  std::vector<bool> has_child(ms.size(), false);
  for (const auto& [p, c] : in.edges) has_child[static_cast<std::size_t>(p)] = true;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    if (!has_child[i]) in.leaf_labels[static_cast<VertexId>(i)] = sys.render(ms[i]);
  }
  return HasseDag{Dag::validate(in), ms};
}

Dag singleton_relabeled_hasse(const SetSystem& sys) {
  if (!validate_system(sys).grounded) {
    throw Error(ErrorKind::NotGrounded,
                "relabeling needs every singleton as a member and no empty member");
  }
  const auto& ms = sys.members();
  DagInput in;
  for (std::size_t i = 0; i < ms.size(); ++i) in.vertices.push_back(static_cast<VertexId>(i));
  in.edges = cover_edges(ms);
  std::vector<bool> has_child(ms.size(), false);
  for (const auto& [p, c] : in.edges) has_child[static_cast<std::size_t>(p)] = true;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    if (has_child[i]) continue;
    // Grounded ⇒ the inclusion-minimal members are exactly the singletons.
    if (ms[i].size() != 1) {
      Error err(ErrorKind::NotGrounded,
                "minimal member " + sys.render(ms[i]) + " is not a singleton");
      throw err;
    }
    in.leaf_labels[static_cast<VertexId>(i)] = sys.ground()[ms[i].front()];
  }
  return Dag::validate(in);
}

Dag realize_with_property(const SetSystem& sys, const SizeIndex& index, RealizeDemand demand,
                          std::uint64_t cap) {
  if (!validate_system(sys).grounded) {
    throw Error(ErrorKind::NotGrounded,
                "realization needs a grounded system (all singletons, no empty member)");
  }
  PreAryResult pre = is_pre_i_ary(sys, index, cap);
  if (!pre.holds) {
    Error err(ErrorKind::NotPreIAry,
              "the set " + sys.render(*pre.witness) + " has " +
                  std::to_string(pre.witness_minimals.size()) +
                  " minimal supersets instead of one");
    for (LabelIndex x : *pre.witness) err.labels.push_back(sys.ground()[x]);
    throw err;
  }
  if (demand == RealizeDemand::relevant) {
    AryResult ary = is_i_ary(sys, index, cap);
    if (!ary.holds) {
      Error err(ErrorKind::NotIAry,
                "member " + sys.render(ary.unwitnessed.front()) +
                    " is no subset's unique minimal superset");
      for (LabelIndex x : ary.unwitnessed.front()) err.labels.push_back(sys.ground()[x]);
      throw err;
    }
  }
  Dag dag = singleton_relabeled_hasse(sys);
  // The hypotheses above are exactly what makes the cover digraph carry the
  // demanded guarantees; keep an internal recheck so a construction bug can
  // never hand out a wrong DAG.
  for_each_index_subset(sys.ground().size(), index, cap, [&](const LabelSet& a) {
    if (lca_set(dag, a).size() != 1) {
      throw std::logic_error("realization lost the unique-lca guarantee");
    }
    return true;
  });
  if (demand == RealizeDemand::relevant && !is_i_lca_relevant(dag, index, cap).holds) {
    throw std::logic_error("realization lost lca-relevance");
  }
  return dag;
}

}  // namespace lcadag
