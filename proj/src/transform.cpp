// Copyright (c) lcadag contributors.
// SPDX-License-Identifier: Apache-2.0
#include "lcadag/transform.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "lcadag/lca.hpp"

namespace lcadag {

Dag ominus(const Dag& dag, const std::vector<VertexId>& remove) {
  if (remove.empty()) return dag;
  std::unordered_set<VertexId> removed;
  for (VertexId v : remove) {
    if (!dag.has_vertex(v)) {
      Error err(ErrorKind::UnknownVertex,
                "cannot remove vertex " + std::to_string(v) + ": it does not exist");
      err.vertices.push_back(v);
      throw err;
    }
    removed.insert(v);
  }
  if (removed.size() == dag.vertex_count()) {
    throw Error(ErrorKind::RemovesEverything, "removal would erase every vertex");
  }

  // Topological order, parents before children (Kahn).
  std::vector<VertexId> topo;
  {
    std::unordered_map<VertexId, std::size_t> pending;
    std::vector<VertexId> ready;
    for (VertexId v : dag.vertex_ids()) {
      pending[v] = dag.in_degree(v);
      if (pending[v] == 0) ready.push_back(v);
    }
    while (!ready.empty()) {
      VertexId v = ready.back();
      ready.pop_back();
      topo.push_back(v);
      for (VertexId c : dag.children(v)) {
        if (--pending[c] == 0) ready.push_back(c);
      }
    }
  }

  // exit[w] for a removed w: the surviving vertices reachable from w along
  // paths whose interior is removed. Children-before-parents order makes the
  // one-step recurrence exact.
  std::unordered_map<VertexId, std::vector<VertexId>> exit;
  auto targets_of = [&](VertexId v) {
    std::vector<VertexId> out;
    for (VertexId c : dag.children(v)) {
      if (!removed.count(c)) {
        out.push_back(c);
      } else {
        const auto& through = exit.at(c);
        out.insert(out.end(), through.begin(), through.end());
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  };

  DagInput in;
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    if (removed.count(*it)) exit[*it] = targets_of(*it);
  }
  for (VertexId v : dag.vertex_ids()) {
    if (removed.count(v)) continue;
    in.vertices.push_back(v);
    for (VertexId t : targets_of(v)) in.edges.emplace_back(v, t);
    if (auto label = dag.label_of(v)) in.leaf_labels[v] = *label;
  }
  return Dag::validate(in);
}

namespace {

// Sorted-vector set comparison helper for cluster systems.
std::vector<LabelSet> members_not_in(const SetSystem& from, const SetSystem& in) {
  std::vector<LabelSet> out;
  for (const LabelSet& m : from.members()) {
    if (!in.contains(m)) out.push_back(m);
  }
  return out;
}

}  // namespace

SimplificationResult simplify(const Dag& dag, const SizeIndex& index, std::uint64_t cap) {
  if (!index.requires_one()) {
    throw std::invalid_argument("simplification is defined for 1-containing size sets");
  }
  IlcaClassification cls = i_lca_vertices(dag, index, cap);
  Dag reduced = cls.non_lca.empty() ? dag : ominus(dag, cls.non_lca);
  SimplificationResult result{
      cls.non_lca,
      reduced,
      reduced.remove_shortcuts(),
      members_not_in(cluster_system(dag), cluster_system(reduced)),
      has_i_lca_property(dag, index, cap).holds,
  };
  // Internal recheck of the contract: the survivors are exactly the lca
  // vertices and each keeps its witness, so the result must be relevant.
  if (!is_i_lca_relevant(result.reduced, index, cap).holds) {
    throw std::logic_error("simplification produced a non-relevant DAG");
  }
  if (result.uniqueness_certified) {
    if (!is_regular(result.reduced_shortcut_free).holds) {
      throw std::logic_error("certified simplification is no cover digraph");
    }
    if (cluster_system(result.reduced) != ic_members(cluster_system(dag), index, cap)) {
      throw std::logic_error("certified simplification lost witnessed members");
    }
  }
  return result;
}

PreservationReport verify_preservation(const Dag& original, const Dag& transformed,
                                       const SizeIndex& index, std::uint64_t cap) {
  if (original.alphabet() != transformed.alphabet()) {
    throw Error(ErrorKind::LabelMismatch,
                "preservation is only defined between DAGs over one alphabet");
  }
  PreservationReport report;

  // s2: no new vertices.
  report.s2.pass = true;
  {
    std::vector<VertexId> invented;
    for (VertexId v : transformed.vertex_ids()) {
      if (!original.has_vertex(v)) invented.push_back(v);
    }
    if (!invented.empty()) {
      report.s2.pass = false;
      report.s2.witness = Witness{"vertices absent from the original", invented, {}};
    }
  }

  // s1: identical labeled leaves.
  report.s1.pass = true;
  {
    auto lo = original.leaves();
    auto lt = transformed.leaves();
    if (lo != lt) {
      report.s1.pass = false;
      std::vector<VertexId> diff;
      std::set_symmetric_difference(lo.begin(), lo.end(), lt.begin(), lt.end(),
                                    std::back_inserter(diff));
      report.s1.witness = Witness{"leaf sets differ", diff, {}};
    } else {
      for (VertexId v : lo) {
        if (original.label_of(v) != transformed.label_of(v)) {
          report.s1.pass = false;
          report.s1.witness = Witness{"a leaf changed its label", {v}, {}};
          break;
        }
      }
    }
  }

  // Shared vertices, ascending.
  std::vector<VertexId> shared;
  for (VertexId v : transformed.vertex_ids()) {
    if (original.has_vertex(v)) shared.push_back(v);
  }

  // s0: clusters survive pointwise and as a family.
  report.s0.pass = true;
  for (VertexId v : shared) {
    if (original.cluster(v) != transformed.cluster(v)) {
      report.s0.pass = false;
      report.s0.witness = Witness{"a shared vertex changed its cluster", {v}, {}};
      break;
    }
  }
  if (report.s0.pass) {
    SetSystem sys_o = cluster_system(original);
    SetSystem sys_t = cluster_system(transformed);
    for (const LabelSet& m : sys_t.members()) {
      if (!sys_o.contains(m)) {
        report.s0.pass = false;
        Witness w{"a new cluster appeared", {}, {}};
        for (LabelIndex x : m) w.labels.push_back(original.alphabet()[x]);
        report.s0.witness = std::move(w);
        break;
      }
    }
  }

  // s3: strict order on shared pairs.
  report.s3.pass = true;
  for (std::size_t i = 0; i < shared.size() && report.s3.pass; ++i) {
    for (std::size_t j = 0; j < shared.size(); ++j) {
      if (i == j) continue;
      if (original.lt(shared[i], shared[j]) != transformed.lt(shared[i], shared[j])) {
        report.s3.pass = false;
        report.s3.witness =
            Witness{"strict order flipped on a shared pair", {shared[i], shared[j]}, {}};
        break;
      }
    }
  }

  // s4: well-defined lcas keep their exact vertex.
  report.s4.pass = true;
  for_each_index_subset(original.alphabet().size(), index, cap, [&](const LabelSet& a) {
    std::vector<VertexId> before = lca_set(original, a);
    if (before.size() != 1) return true;
    std::vector<VertexId> after = lca_set(transformed, a);
    if (after != before) {
      report.s4.pass = false;
      Witness w{"a well-defined lca moved or vanished", after, {}};
      for (LabelIndex x : a) w.labels.push_back(original.alphabet()[x]);
      report.s4.witness = std::move(w);
      return false;
    }
    return true;
  });

  return report;
}

}  // namespace lcadag
