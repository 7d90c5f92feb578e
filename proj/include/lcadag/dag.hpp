// Copyright (c) lcadag contributors.
// SPDX-License-Identifier: Apache-2.0
#ifndef LCADAG_DAG_HPP
#define LCADAG_DAG_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lcadag/errors.hpp"
#include "lcadag/set_system.hpp"
#include "lcadag/types.hpp"

namespace lcadag {

// Raw description of a labeled DAG, as supplied by a caller or a parser.
struct DagInput {
  std::vector<VertexId> vertices;
  std::vector<std::pair<VertexId, VertexId>> edges;  // (parent, child)
  std::map<VertexId, std::string> leaf_labels;
};

// An immutable DAG whose out-degree-0 vertices ("leaves") carry pairwise
// distinct labels; the label set is the ground set the clusters live over.
// The partial order reads leaf-upward: u ⪯ v iff v reaches u, so leaves are
// minimal and roots (in-degree 0) are maximal. Construction validates
// everything and precomputes reachability and clusters; instances are safe
// to share across threads.
class Dag {
 public:
  // Throws Error with kind EmptyGraph, DuplicateVertex, UnknownVertex,
  // SelfLoop, Cyclic (witness: one cycle), UnlabeledLeaf, LabeledInternal,
  // or DuplicateLabel. Duplicate edges are collapsed silently (the edge set
  // is a set).
  static Dag validate(const DagInput& input);

  std::size_t vertex_count() const { return ids_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<VertexId>& vertex_ids() const { return ids_; }  // ascending
  const std::vector<std::pair<VertexId, VertexId>>& edge_list() const { return edges_; }
  bool has_vertex(VertexId v) const;
  bool has_edge(VertexId parent, VertexId child) const;
  std::vector<VertexId> children(VertexId v) const;  // ascending
  std::vector<VertexId> parents(VertexId v) const;   // ascending
  std::size_t out_degree(VertexId v) const;
  std::size_t in_degree(VertexId v) const;
  std::vector<VertexId> leaves() const;  // ascending
  std::vector<VertexId> roots() const;   // ascending

  // The sorted label alphabet X.
  const std::vector<std::string>& alphabet() const { return alphabet_; }
  std::optional<std::string> label_of(VertexId v) const;
  std::optional<VertexId> leaf_with_label(const std::string& label) const;

  // u ⪯ v: v = u or v reaches u by a directed path.
  bool leq(VertexId u, VertexId v) const;
  bool lt(VertexId u, VertexId v) const { return u != v && leq(u, v); }
  bool comparable(VertexId u, VertexId v) const { return leq(u, v) || leq(v, u); }

  // Labels of the leaves below v (v's cluster), as indices into alphabet().
  const LabelSet& cluster(VertexId v) const;

  // All shortcut edges: (u,w) ∈ E such that some v satisfies w ≺ v ≺ u.
  std::vector<std::pair<VertexId, VertexId>> shortcuts() const;
  // Copy with every shortcut removed. Order and clusters are unchanged;
  // idempotent; the result contains no shortcut.
  Dag remove_shortcuts() const;

  bool operator==(const Dag& other) const {
    return ids_ == other.ids_ && edges_ == other.edges_ && label_pairs_ == other.label_pairs_;
  }
  bool operator!=(const Dag& other) const { return !(*this == other); }

 private:
  Dag() = default;
  std::uint32_t index_of(VertexId v) const;  // throws UnknownVertex
  void build_derived();                      // topo order, clusters, reachability
  bool reaches(std::uint32_t from, std::uint32_t to) const;

  std::vector<VertexId> ids_;  // sorted ascending; dense index = position
  std::unordered_map<VertexId, std::uint32_t> index_;
  std::vector<std::vector<std::uint32_t>> children_, parents_;  // sorted
  std::vector<std::pair<VertexId, VertexId>> edges_;            // sorted
  std::vector<std::string> alphabet_;                           // sorted
  std::vector<std::pair<VertexId, std::string>> label_pairs_;   // sorted by id
  static constexpr std::uint32_t kNoLabel = 0xffffffffu;
  std::vector<std::uint32_t> label_index_;   // per vertex, kNoLabel if none
  std::vector<std::uint32_t> leaf_vertex_;   // per label index, vertex index
  std::vector<std::uint32_t> topo_;          // parents before children
  std::vector<LabelSet> cluster_;            // per vertex index
  // Transitive reachability as bitset rows (descendants incl. self), built
  // only up to kClosureLimit vertices; larger graphs fall back to DFS.
  static constexpr std::size_t kClosureLimit = 4096;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> desc_;
};

// Per-vertex clusters plus the deduplicated system they form.
struct Clusters {
  std::map<VertexId, LabelSet> by_vertex;
  SetSystem system;
};
Clusters clusters(const Dag& dag);
// Just the set system (grounded by construction for any valid Dag).
SetSystem cluster_system(const Dag& dag);

// A named counterexample attached to a failed classification flag.
struct Witness {
  std::string what;
  std::vector<VertexId> vertices;
  std::vector<std::string> labels;
};

struct PccResult {
  bool holds = false;
  std::optional<Witness> witness;  // incomparable pair with nested clusters
};
// Comparability ⟺ cluster nesting, for every vertex pair.
PccResult is_pcc(const Dag& dag);

struct RegularResult {
  bool holds = false;
  std::optional<Witness> witness;
};
// v ↦ C(v) is an isomorphism onto the cover digraph of the cluster system.
RegularResult is_regular(const Dag& dag);

struct PhylogeneticResult {
  bool holds = false;
  std::optional<Witness> witness;  // vertex with out-degree 1 and in-degree <= 1
};
PhylogeneticResult is_phylogenetic(const Dag& dag);

// Shape flags. `network` means a single root (which for a DAG implies weak
// connectivity); `tree` a network without in-degree > 1; `galled_tree` a
// network whose biconnected blocks are single vertices, single edges, or
// exactly two internally disjoint directed paths sharing their endpoints.
struct ShapeReport {
  bool connected = false;
  bool network = false;
  bool tree = false;
  bool galled_tree = false;
  bool non_trivial = false;          // some cluster has size > 1
  std::optional<int> kappa;          // smallest cluster size > 1, absent when trivial
  std::map<std::string, Witness> witnesses;  // per failed flag
};
ShapeReport recognize_shape(const Dag& dag);

}  // namespace lcadag

#endif
