// Copyright (c) lcadag contributors.
// SPDX-License-Identifier: Apache-2.0
#include "lcadag/dag.hpp"

#include <algorithm>
#include <array>
#include <queue>

namespace lcadag {

namespace {

// Kahn's algorithm, smallest index first. Returns parents-before-children
// order; shorter than n exactly when a directed cycle exists.
std::vector<std::uint32_t> topo_order(const std::vector<std::vector<std::uint32_t>>& children,
                                      const std::vector<std::vector<std::uint32_t>>& parents) {
  std::size_t n = children.size();
  std::vector<std::size_t> pending(n);
  std::priority_queue<std::uint32_t, std::vector<std::uint32_t>, std::greater<>> ready;
  for (std::uint32_t v = 0; v < n; ++v) {
    pending[v] = parents[v].size();
    if (pending[v] == 0) ready.push(v);
  }
  std::vector<std::uint32_t> order;
  order.reserve(n);
  while (!ready.empty()) {
    std::uint32_t v = ready.top();
    ready.pop();
    order.push_back(v);
    for (std::uint32_t c : children[v]) {
      if (--pending[c] == 0) ready.push(c);
    }
  }
  return order;
}

// One directed cycle, as a vertex walk whose consecutive entries (cyclically)
// are edges. Preconditions: the graph restricted to `alive` has a cycle.
std::vector<std::uint32_t> find_cycle(const std::vector<std::vector<std::uint32_t>>& children,
                                      std::vector<bool> alive) {
  std::size_t n = children.size();
  // Strip vertices without a living child until every living vertex has one.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::uint32_t v = 0; v < n; ++v) {
      if (!alive[v]) continue;
      bool has_child = false;
      for (std::uint32_t c : children[v]) {
        if (alive[c]) {
          has_child = true;
          break;
        }
      }
      if (!has_child) {
        alive[v] = false;
        changed = true;
      }
    }
  }
  std::uint32_t start = 0;
  while (start < n && !alive[start]) ++start;
  std::vector<std::uint32_t> walk;
  std::vector<std::size_t> pos(n, SIZE_MAX);
  std::uint32_t v = start;
  while (pos[v] == SIZE_MAX) {
    pos[v] = walk.size();
    walk.push_back(v);
    for (std::uint32_t c : children[v]) {
      if (alive[c]) {
        v = c;
        break;
      }
    }
  }
  return std::vector<std::uint32_t>(walk.begin() + static_cast<std::ptrdiff_t>(pos[v]),
                                    walk.end());
}

}  // namespace

Dag Dag::validate(const DagInput& input) {
  Dag dag;
  if (input.vertices.empty()) {
    throw Error(ErrorKind::EmptyGraph, "a DAG needs at least one vertex");
  }
  dag.ids_ = input.vertices;
  std::sort(dag.ids_.begin(), dag.ids_.end());
  auto dup = std::adjacent_find(dag.ids_.begin(), dag.ids_.end());
  if (dup != dag.ids_.end()) {
    Error err(ErrorKind::DuplicateVertex, "vertex " + std::to_string(*dup) + " listed twice");
    err.vertices.push_back(*dup);
    throw err;
  }
  std::size_t n = dag.ids_.size();
  dag.index_.reserve(n);
  for (std::uint32_t i = 0; i < n; ++i) dag.index_[dag.ids_[i]] = i;

  dag.edges_ = input.edges;
  for (const auto& [p, c] : dag.edges_) {
    for (VertexId v : {p, c}) {
      if (!dag.index_.count(v)) {
        Error err(ErrorKind::UnknownVertex,
                  "edge endpoint " + std::to_string(v) + " is not a vertex");
        err.vertices.push_back(v);
        throw err;
      }
    }
    if (p == c) {
      Error err(ErrorKind::SelfLoop, "self loop on vertex " + std::to_string(p));
      err.vertices.push_back(p);
      throw err;
    }
  }
  std::sort(dag.edges_.begin(), dag.edges_.end());
  dag.edges_.erase(std::unique(dag.edges_.begin(), dag.edges_.end()), dag.edges_.end());

  dag.children_.assign(n, {});
  dag.parents_.assign(n, {});
  for (const auto& [p, c] : dag.edges_) {
    dag.children_[dag.index_.at(p)].push_back(dag.index_.at(c));
    dag.parents_[dag.index_.at(c)].push_back(dag.index_.at(p));
  }
  // edges_ is sorted by (parent, child) and ids are ascending, so both
  // adjacency directions came out sorted already.

  dag.topo_ = topo_order(dag.children_, dag.parents_);
  if (dag.topo_.size() < n) {
    std::vector<bool> alive(n, true);
    for (std::uint32_t v : dag.topo_) alive[v] = false;
    std::vector<std::uint32_t> cycle = find_cycle(dag.children_, std::move(alive));
    Error err(ErrorKind::Cyclic, "the edges contain a directed cycle");
    for (std::uint32_t v : cycle) err.vertices.push_back(dag.ids_[v]);
    throw err;
  }

  // Labels: exactly the out-degree-0 vertices, pairwise distinct.
  dag.label_index_.assign(n, kNoLabel);
  for (const auto& [v, label] : input.leaf_labels) {
    auto it = dag.index_.find(v);
    if (it == dag.index_.end()) {
      Error err(ErrorKind::UnknownVertex,
                "label \"" + label + "\" names vertex " + std::to_string(v) +
                    " which does not exist");
      err.vertices.push_back(v);
      err.labels.push_back(label);
      throw err;
    }
    if (!dag.children_[it->second].empty()) {
      Error err(ErrorKind::LabeledInternal,
                "vertex " + std::to_string(v) + " has children but carries label \"" +
                    label + "\"");
      err.vertices.push_back(v);
      err.labels.push_back(label);
      throw err;
    }
  }
  for (std::uint32_t i = 0; i < n; ++i) {
    if (dag.children_[i].empty() && !input.leaf_labels.count(dag.ids_[i])) {
      Error err(ErrorKind::UnlabeledLeaf,
                "leaf " + std::to_string(dag.ids_[i]) + " has no label");
      err.vertices.push_back(dag.ids_[i]);
      throw err;
    }
  }
  dag.alphabet_.reserve(input.leaf_labels.size());
  for (const auto& [v, label] : input.leaf_labels) dag.alphabet_.push_back(label);
  std::sort(dag.alphabet_.begin(), dag.alphabet_.end());
  auto ldup = std::adjacent_find(dag.alphabet_.begin(), dag.alphabet_.end());
  if (ldup != dag.alphabet_.end()) {
    Error err(ErrorKind::DuplicateLabel, "label \"" + *ldup + "\" used on two leaves");
    err.labels.push_back(*ldup);
    for (const auto& [v, label] : input.leaf_labels) {
      if (label == *ldup) err.vertices.push_back(v);
    }
    throw err;
  }
  dag.leaf_vertex_.assign(dag.alphabet_.size(), 0);
  for (const auto& [v, label] : input.leaf_labels) {
    auto li = static_cast<std::uint32_t>(
        std::lower_bound(dag.alphabet_.begin(), dag.alphabet_.end(), label) -
        dag.alphabet_.begin());
    dag.label_index_[dag.index_.at(v)] = li;
    dag.leaf_vertex_[li] = dag.index_.at(v);
    dag.label_pairs_.emplace_back(v, label);
  }
  std::sort(dag.label_pairs_.begin(), dag.label_pairs_.end());

  dag.build_derived();
  return dag;
}

void Dag::build_derived() {
  std::size_t n = ids_.size();
  // Clusters, children before parents.
  cluster_.assign(n, {});
  for (auto it = topo_.rbegin(); it != topo_.rend(); ++it) {
    std::uint32_t v = *it;
    if (children_[v].empty()) {
      cluster_[v] = {label_index_[v]};
      continue;
    }
    LabelSet acc;
    for (std::uint32_t c : children_[v]) acc = set_union(acc, cluster_[c]);
    cluster_[v] = std::move(acc);
  }
  // Reachability closure as bitsets (skipped for very large graphs).
  if (n <= kClosureLimit) {
    words_ = (n + 63) / 64;
    desc_.assign(n * words_, 0);
    for (auto it = topo_.rbegin(); it != topo_.rend(); ++it) {
      std::uint32_t v = *it;
      std::uint64_t* row = desc_.data() + v * words_;
      row[v / 64] |= std::uint64_t{1} << (v % 64);
      for (std::uint32_t c : children_[v]) {
        const std::uint64_t* crow = desc_.data() + c * words_;
        for (std::size_t w = 0; w < words_; ++w) row[w] |= crow[w];
      }
    }
  }
}

std::uint32_t Dag::index_of(VertexId v) const {
  auto it = index_.find(v);
  if (it == index_.end()) {
    Error err(ErrorKind::UnknownVertex, "vertex " + std::to_string(v) + " does not exist");
    err.vertices.push_back(v);
    throw err;
  }
  return it->second;
}

bool Dag::reaches(std::uint32_t from, std::uint32_t to) const {
  if (!desc_.empty()) {
    return (desc_[from * words_ + to / 64] >> (to % 64)) & 1;
  }
  if (from == to) return true;
  std::vector<bool> seen(ids_.size(), false);
  std::vector<std::uint32_t> stack{from};
  seen[from] = true;
  while (!stack.empty()) {
    std::uint32_t v = stack.back();
    stack.pop_back();
    for (std::uint32_t c : children_[v]) {
      if (c == to) return true;
      if (!seen[c]) {
        seen[c] = true;
        stack.push_back(c);
      }
    }
  }
  return false;
}

bool Dag::has_vertex(VertexId v) const { return index_.count(v) != 0; }

bool Dag::has_edge(VertexId parent, VertexId child) const {
  const auto& cs = children_[index_of(parent)];
  return std::binary_search(cs.begin(), cs.end(), index_of(child));
}

std::vector<VertexId> Dag::children(VertexId v) const {
  std::vector<VertexId> out;
  for (std::uint32_t c : children_[index_of(v)]) out.push_back(ids_[c]);
  return out;
}

std::vector<VertexId> Dag::parents(VertexId v) const {
  std::vector<VertexId> out;
  for (std::uint32_t p : parents_[index_of(v)]) out.push_back(ids_[p]);
  return out;
}

std::size_t Dag::out_degree(VertexId v) const { return children_[index_of(v)].size(); }
std::size_t Dag::in_degree(VertexId v) const { return parents_[index_of(v)].size(); }

std::vector<VertexId> Dag::leaves() const {
  std::vector<VertexId> out;
  for (std::uint32_t i = 0; i < ids_.size(); ++i) {
    if (children_[i].empty()) out.push_back(ids_[i]);
  }
  return out;
}

std::vector<VertexId> Dag::roots() const {
  std::vector<VertexId> out;
  for (std::uint32_t i = 0; i < ids_.size(); ++i) {
    if (parents_[i].empty()) out.push_back(ids_[i]);
  }
  return out;
}

std::optional<std::string> Dag::label_of(VertexId v) const {
  std::uint32_t li = label_index_[index_of(v)];
  if (li == kNoLabel) return std::nullopt;
  return alphabet_[li];
}

std::optional<VertexId> Dag::leaf_with_label(const std::string& label) const {
  auto it = std::lower_bound(alphabet_.begin(), alphabet_.end(), label);
  if (it == alphabet_.end() || *it != label) return std::nullopt;
  return ids_[leaf_vertex_[static_cast<std::size_t>(it - alphabet_.begin())]];
}

bool Dag::leq(VertexId u, VertexId v) const {
  std::uint32_t ui = index_of(u), vi = index_of(v);
  return reaches(vi, ui);
}

const LabelSet& Dag::cluster(VertexId v) const { return cluster_[index_of(v)]; }

std::vector<std::pair<VertexId, VertexId>> Dag::shortcuts() const {
  // (u,w) is a shortcut iff some other child c of u still reaches w.
  std::vector<std::pair<VertexId, VertexId>> out;
  for (const auto& e : edges_) {
    std::uint32_t u = index_.at(e.first), w = index_.at(e.second);
    for (std::uint32_t c : children_[u]) {
      if (c != w && reaches(c, w)) {
        out.push_back(e);
        break;
      }
    }
  }
  return out;
}

Dag Dag::remove_shortcuts() const {
  auto cut = shortcuts();
  if (cut.empty()) return *this;
  DagInput in;
  in.vertices = ids_;
  for (const auto& e : edges_) {
    if (!std::binary_search(cut.begin(), cut.end(), e)) in.edges.push_back(e);
  }
  for (const auto& [v, label] : label_pairs_) in.leaf_labels[v] = label;
  return validate(in);
}

Clusters clusters(const Dag& dag) {
  Clusters out{{}, cluster_system(dag)};
  for (VertexId v : dag.vertex_ids()) out.by_vertex[v] = dag.cluster(v);
  return out;
}

SetSystem cluster_system(const Dag& dag) {
  std::vector<LabelSet> members;
  members.reserve(dag.vertex_count());
  for (VertexId v : dag.vertex_ids()) members.push_back(dag.cluster(v));
  return SetSystem(dag.alphabet(), std::move(members));
}

PccResult is_pcc(const Dag& dag) {
  const auto& ids = dag.vertex_ids();
  for (std::size_t i = 0; i < ids.size(); ++i) {
    for (std::size_t j = i + 1; j < ids.size(); ++j) {
      const LabelSet& ci = dag.cluster(ids[i]);
      const LabelSet& cj = dag.cluster(ids[j]);
      bool nested = is_subset(ci, cj) || is_subset(cj, ci);
      if (nested != dag.comparable(ids[i], ids[j])) {
        PccResult r;
        r.witness = Witness{nested ? "clusters nest but the vertices are incomparable"
                                   : "vertices compare but their clusters do not nest",
                            {ids[i], ids[j]},
                            {}};
        return r;
      }
    }
  }
  PccResult r;
  r.holds = true;
  return r;
}

RegularResult is_regular(const Dag& dag) {
  RegularResult r;
  const auto& ids = dag.vertex_ids();
  // Injectivity of v ↦ C(v).
  for (std::size_t i = 0; i < ids.size(); ++i) {
    for (std::size_t j = i + 1; j < ids.size(); ++j) {
      if (dag.cluster(ids[i]) == dag.cluster(ids[j])) {
        r.witness = Witness{"two vertices share one cluster", {ids[i], ids[j]}, {}};
        return r;
      }
    }
  }
  // Edges must be exactly the cover pairs of the cluster system.
  SetSystem sys = cluster_system(dag);
  for (std::size_t i = 0; i < ids.size(); ++i) {
    for (std::size_t j = 0; j < ids.size(); ++j) {
      if (i == j) continue;
      const LabelSet& big = dag.cluster(ids[i]);
      const LabelSet& small = dag.cluster(ids[j]);
      bool cover = small != big && is_subset(small, big);
      if (cover) {
        for (const LabelSet& m : sys.members()) {
          if (m != small && m != big && is_subset(small, m) && is_subset(m, big)) {
            cover = false;
            break;
          }
        }
      }
      if (cover != dag.has_edge(ids[i], ids[j])) {
        r.witness = Witness{cover ? "cover pair without an edge" : "edge that is no cover pair",
                            {ids[i], ids[j]},
                            {}};
        return r;
      }
    }
  }
  r.holds = true;
  return r;
}

PhylogeneticResult is_phylogenetic(const Dag& dag) {
  for (VertexId v : dag.vertex_ids()) {
    if (dag.out_degree(v) == 1 && dag.in_degree(v) <= 1) {
      PhylogeneticResult r;
      r.witness = Witness{"vertex with out-degree 1 and in-degree <= 1", {v}, {}};
      return r;
    }
  }
  PhylogeneticResult r;
  r.holds = true;
  return r;
}

namespace {

struct Blocks {
  // Each block as a list of edge positions into Dag::edge_list().
  std::vector<std::vector<std::size_t>> edge_sets;
};

Blocks biconnected_blocks(const Dag& dag) {
  const auto& edges = dag.edge_list();
  std::size_t n = dag.vertex_count();
  const auto& ids = dag.vertex_ids();
  std::unordered_map<VertexId, std::uint32_t> index;
  for (std::uint32_t i = 0; i < n; ++i) index[ids[i]] = i;
  // Undirected incidence: (neighbor, edge position).
  std::vector<std::vector<std::pair<std::uint32_t, std::size_t>>> und(n);
  for (std::size_t k = 0; k < edges.size(); ++k) {
    std::uint32_t a = index.at(edges[k].first), b = index.at(edges[k].second);
    und[a].emplace_back(b, k);
    und[b].emplace_back(a, k);
  }

  Blocks out;
  std::vector<std::uint32_t> disc(n, 0), low(n, 0);
  std::vector<bool> used_edge(edges.size(), false);
  std::uint32_t timer = 1;
  std::vector<std::size_t> estack;

  struct Frame {
    std::uint32_t v;
    std::uint32_t parent;
    std::size_t next = 0;
  };
  for (std::uint32_t s = 0; s < n; ++s) {
    if (disc[s]) continue;
    std::vector<Frame> stack{{s, s, 0}};
    disc[s] = low[s] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next < und[f.v].size()) {
        auto [w, k] = und[f.v][f.next++];
        if (used_edge[k]) continue;
        if (!disc[w]) {
          used_edge[k] = true;
          estack.push_back(k);
          disc[w] = low[w] = timer++;
          stack.push_back({w, f.v, 0});
        } else {
          used_edge[k] = true;
          estack.push_back(k);
          low[f.v] = std::min(low[f.v], disc[w]);
        }
      } else {
        std::uint32_t v = f.v;
        std::uint32_t p = f.parent;
        stack.pop_back();
        if (stack.empty()) break;
        low[p] = std::min(low[p], low[v]);
        if (low[v] >= disc[p]) {
          // Pop this block: everything back to (and including) the tree edge
          // p—v, which was pushed immediately before v's subtree.
          std::vector<std::size_t> block;
          while (!estack.empty()) {
            std::size_t k = estack.back();
            estack.pop_back();
            block.push_back(k);
            std::uint32_t a = index.at(edges[k].first), b = index.at(edges[k].second);
            if ((a == p && b == v) || (a == v && b == p)) break;
          }
          out.edge_sets.push_back(std::move(block));
        }
      }
    }
  }
  return out;
}

}  // namespace

ShapeReport recognize_shape(const Dag& dag) {
  ShapeReport report;
  const auto& ids = dag.vertex_ids();

  // Weak connectivity.
  {
    std::vector<bool> seen(ids.size(), false);
    std::vector<VertexId> stack{ids.front()};
    seen[0] = true;
    std::size_t count = 1;
    std::unordered_map<VertexId, std::size_t> index;
    for (std::size_t i = 0; i < ids.size(); ++i) index[ids[i]] = i;
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      auto step = [&](VertexId w) {
        std::size_t wi = index.at(w);
        if (!seen[wi]) {
          seen[wi] = true;
          ++count;
          stack.push_back(w);
        }
      };
      for (VertexId w : dag.children(v)) step(w);
      for (VertexId w : dag.parents(v)) step(w);
    }
    report.connected = count == ids.size();
    if (!report.connected) {
      Witness w{"more than one connected component", {}, {}};
      for (std::size_t i = 0; i < ids.size(); ++i) {
        if (!seen[i]) {
          w.vertices.push_back(ids[i]);
          break;
        }
      }
      report.witnesses["connected"] = std::move(w);
    }
  }

  std::vector<VertexId> roots = dag.roots();
  report.network = roots.size() == 1;
  if (!report.network) {
    report.witnesses["network"] = Witness{"root count differs from one", roots, {}};
  }

  report.tree = report.network;
  for (VertexId v : ids) {
    if (dag.in_degree(v) > 1) {
      if (report.network) {
        report.witnesses["tree"] =
            Witness{"vertex with more than one parent", {v}, {}};
      }
      report.tree = false;
      break;
    }
  }

  report.galled_tree = report.network;
  if (report.network) {
    Blocks blocks = biconnected_blocks(dag);
    const auto& edges = dag.edge_list();
    for (const auto& block : blocks.edge_sets) {
      if (block.size() <= 1) continue;
      // Count per-vertex undirected / directed degrees inside this block.
      std::map<VertexId, std::array<int, 2>> degree;  // {in, out}
      bool ok = true;
      for (std::size_t k : block) {
        degree[edges[k].first][1] += 1;
        degree[edges[k].second][0] += 1;
      }
      int sources = 0, sinks = 0;
      for (const auto& [v, d] : degree) {
        int total = d[0] + d[1];
        if (total != 2) {
          ok = false;
          break;
        }
        if (d[0] == 0 && d[1] == 2) ++sources;
        else if (d[0] == 2 && d[1] == 0) ++sinks;
        else if (!(d[0] == 1 && d[1] == 1)) ok = false;
      }
      ok = ok && sources == 1 && sinks == 1;
      if (!ok) {
        Witness w{"block is not two internally disjoint paths", {}, {}};
        for (const auto& [v, d] : degree) w.vertices.push_back(v);
        report.witnesses["galled_tree"] = std::move(w);
        report.galled_tree = false;
        break;
      }
    }
  }

  SetSystem sys = cluster_system(dag);
  for (const LabelSet& m : sys.members()) {
    if (m.size() > 1) {
      report.non_trivial = true;
      int size = static_cast<int>(m.size());
      if (!report.kappa || size < *report.kappa) report.kappa = size;
    }
  }
  return report;
}

}  // namespace lcadag
