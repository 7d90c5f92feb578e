// Copyright (c) lcadag contributors.
// SPDX-License-Identifier: Apache-2.0
#include "lcadag/generator.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#include "lcadag/errors.hpp"
#include "lcadag/hasse.hpp"
#include "lcadag/lca.hpp"

namespace lcadag {

int Rng::range(int lo, int hi) {
  return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

bool Rng::chance(double p) {
  // 53-bit draw in [0,1); always consumes exactly one engine step.
  double u = static_cast<double>(next() >> 11) * (1.0 / 9007199254740992.0);
  return u < p;
}

namespace {

[[noreturn]] void infeasible(const std::string& what) {
  throw Error(ErrorKind::InfeasibleParams, "infeasible generator parameters: " + what);
}

void validate_params(const GenParams& p) {
  if (p.leaf_min < 1) infeasible("leaf_min must be at least 1");
  if (p.leaf_max < p.leaf_min) infeasible("leaf range is empty");
  if (p.internal_min < 0) infeasible("internal_min must be nonnegative");
  if (p.internal_max < p.internal_min) infeasible("internal range is empty");
  if (!(p.edge_density >= 0.0 && p.edge_density <= 1.0))
    infeasible("edge_density must lie in [0,1]");
  if (p.flavor == Flavor::property_dag) {
    if (p.sizes.empty()) infeasible("property flavor needs a nonempty size set");
    bool has_one = false;
    for (int s : p.sizes) {
      if (s < 1) infeasible("sizes must be positive");
      if (s == 1) has_one = true;
    }
    if (!has_one) infeasible("property flavor needs 1 in the size set");
  }
}

std::string nth_label(int i) {
  if (i < 26) return std::string(1, static_cast<char>('a' + i));
  return "x" + std::to_string(i);
}

std::vector<std::string> make_ground(int n) {
  std::vector<std::string> ground;
  ground.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) ground.push_back(nth_label(i));
  return ground;
}

LabelSet full_set(int n) {
  LabelSet s;
  s.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) s.push_back(static_cast<LabelIndex>(i));
  return s;
}

// --- arbitrary_dag -----------------------------------------------------

// Leaves get ids 0..L-1, internal vertices L..L+I-1; edges only point from a
// larger id to a smaller one, so acyclicity holds by construction. Every
// internal vertex is forced to keep at least one child.
Dag gen_arbitrary(Rng& rng, const GenParams& p) {
  int leaves = rng.range(p.leaf_min, p.leaf_max);
  int internals = rng.range(p.internal_min, p.internal_max);
  DagInput in;
  for (VertexId v = 0; v < leaves + internals; ++v) in.vertices.push_back(v);
  for (int i = 0; i < leaves; ++i)
    in.leaf_labels[static_cast<VertexId>(i)] = nth_label(i);
  for (VertexId u = leaves; u < leaves + internals; ++u) {
    bool any = false;
    for (VertexId w = 0; w < u; ++w) {
      if (rng.chance(p.edge_density)) {
        in.edges.emplace_back(u, w);
        any = true;
      }
    }
    if (!any)
      in.edges.emplace_back(u, static_cast<VertexId>(rng.below(static_cast<std::uint64_t>(u))));
  }
  return Dag::validate(in);
}

// --- system cores -------------------------------------------------------

SetSystem gen_grounded(Rng& rng, const GenParams& p) {
  int n = rng.range(p.leaf_min, p.leaf_max);
  std::set<LabelSet> mem;
  for (int i = 0; i < n; ++i) mem.insert({static_cast<LabelIndex>(i)});
  if (rng.chance(0.6)) mem.insert(full_set(n));
  int extra = rng.range(p.internal_min, p.internal_max);
  for (int e = 0; e < extra; ++e) {
    LabelSet s;
    for (int i = 0; i < n; ++i)
      if (rng.chance(0.5)) s.push_back(static_cast<LabelIndex>(i));
    if (s.empty()) s.push_back(static_cast<LabelIndex>(rng.below(static_cast<std::uint64_t>(n))));
    mem.insert(s);
  }
  return SetSystem(make_ground(n), std::vector<LabelSet>(mem.begin(), mem.end()));
}

// Closing a grounded family that contains the full ground set under pairwise
// intersection makes every nonempty subset have a unique inclusion-minimal
// superset member (two distinct minimal supersets would intersect in a
// smaller member containing the subset). Such systems realize the unique-lca
// property for every size index via their cover digraph.
SetSystem gen_closed_clustering(Rng& rng, const GenParams& p) {
  int n = rng.range(p.leaf_min, p.leaf_max);
  std::set<LabelSet> mem;
  for (int i = 0; i < n; ++i) mem.insert({static_cast<LabelIndex>(i)});
  mem.insert(full_set(n));
  int extra = rng.range(p.internal_min, p.internal_max);
  for (int e = 0; e < extra; ++e) {
    LabelSet s;
    for (int i = 0; i < n; ++i)
      if (rng.chance(0.5)) s.push_back(static_cast<LabelIndex>(i));
    if (!s.empty()) mem.insert(s);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<LabelSet> cur(mem.begin(), mem.end());
    for (std::size_t i = 0; i < cur.size(); ++i) {
      for (std::size_t j = i + 1; j < cur.size(); ++j) {
        LabelSet x = set_intersection(cur[i], cur[j]);
        if (!x.empty() && mem.insert(x).second) grew = true;
      }
    }
  }
  return SetSystem(make_ground(n), std::vector<LabelSet>(mem.begin(), mem.end()));
}

// Recursive laminar partition: blocks are recorded and then split into
// disjoint parts, so no two recorded sets can overlap.
void split_laminar(Rng& rng, std::vector<LabelIndex> block, std::set<LabelSet>& mem) {
  LabelSet as_set(block.begin(), block.end());
  std::sort(as_set.begin(), as_set.end());
  mem.insert(as_set);
  if (block.size() <= 1) return;
  rng.shuffle(block);
  int max_parts = static_cast<int>(std::min<std::size_t>(block.size(), 3));
  int parts = rng.range(2, max_parts);
  std::set<std::size_t> cuts;
  while (static_cast<int>(cuts.size()) < parts - 1)
    cuts.insert(1 + static_cast<std::size_t>(rng.below(block.size() - 1)));
  std::size_t start = 0;
  std::vector<std::size_t> stops(cuts.begin(), cuts.end());
  stops.push_back(block.size());
  for (std::size_t stop : stops) {
    split_laminar(rng, std::vector<LabelIndex>(block.begin() + static_cast<std::ptrdiff_t>(start),
                                               block.begin() + static_cast<std::ptrdiff_t>(stop)),
                  mem);
    start = stop;
  }
}

SetSystem gen_tree_like(Rng& rng, const GenParams& p) {
  int n = rng.range(p.leaf_min, p.leaf_max);
  std::set<LabelSet> mem;
  std::vector<LabelIndex> all;
  for (int i = 0; i < n; ++i) all.push_back(static_cast<LabelIndex>(i));
  split_laminar(rng, all, mem);
  return SetSystem(make_ground(n), std::vector<LabelSet>(mem.begin(), mem.end()));
}

// Builds a random galled tree (every biconnected block is a vertex, an edge,
// or two internally disjoint directed paths sharing exactly their endpoints)
// whose leaves are the given labels; the cluster system of such a network is
// always closed, free of 3-overlaps, and has equal pairwise intersections
// along overlapping clusters.
struct GalledBuilder {
  Rng& rng;
  DagInput in;
  VertexId next = 0;

  VertexId fresh() {
    VertexId v = next++;
    in.vertices.push_back(v);
    return v;
  }

  std::vector<std::vector<LabelIndex>> cut_parts(std::vector<LabelIndex> block, int parts) {
    rng.shuffle(block);
    std::set<std::size_t> cuts;
    while (static_cast<int>(cuts.size()) < parts - 1)
      cuts.insert(1 + static_cast<std::size_t>(rng.below(block.size() - 1)));
    std::vector<std::size_t> stops(cuts.begin(), cuts.end());
    stops.push_back(block.size());
    std::vector<std::vector<LabelIndex>> out;
    std::size_t start = 0;
    for (std::size_t stop : stops) {
      out.emplace_back(block.begin() + static_cast<std::ptrdiff_t>(start),
                       block.begin() + static_cast<std::ptrdiff_t>(stop));
      start = stop;
    }
    return out;
  }

  VertexId build(std::vector<LabelIndex> block) {
    if (block.size() == 1) {
      VertexId v = fresh();
      in.leaf_labels[v] = nth_label(static_cast<int>(block[0]));
      return v;
    }
    if (rng.chance(0.45)) return build_gall(std::move(block));
    int parts = rng.range(2, static_cast<int>(std::min<std::size_t>(block.size(), 3)));
    std::vector<std::vector<LabelIndex>> chunks = cut_parts(std::move(block), parts);
    VertexId v = fresh();
    for (auto& chunk : chunks) in.edges.emplace_back(v, build(std::move(chunk)));
    return v;
  }

  // One cycle: a fresh source, two directed paths meeting at the sink. Each
  // path-interior vertex carries one pendant subtree so it stays internal.
  VertexId build_gall(std::vector<LabelIndex> block) {
    rng.shuffle(block);
    std::size_t sink_size = 1 + static_cast<std::size_t>(rng.below(block.size() - 1));
    std::vector<LabelIndex> sink_block(block.begin(),
                                       block.begin() + static_cast<std::ptrdiff_t>(sink_size));
    std::vector<LabelIndex> rest(block.begin() + static_cast<std::ptrdiff_t>(sink_size),
                                 block.end());
    int interiors = rng.range(1, static_cast<int>(std::min<std::size_t>(rest.size(), 3)));
    std::vector<std::vector<LabelIndex>> pendants = cut_parts(std::move(rest), interiors);

    VertexId source = fresh();
    VertexId sink = build(std::move(sink_block));
    std::vector<VertexId> tails[2] = {{source}, {source}};
    for (auto& pendant : pendants) {
      int side = rng.chance(0.5) ? 0 : 1;
      VertexId w = fresh();
      in.edges.emplace_back(tails[side].back(), w);
      in.edges.emplace_back(w, build(std::move(pendant)));
      tails[side].push_back(w);
    }
    in.edges.emplace_back(tails[0].back(), sink);
    in.edges.emplace_back(tails[1].back(), sink);
    return source;
  }
};

SetSystem gen_galled_like(Rng& rng, const GenParams& p) {
  int n = rng.range(p.leaf_min, p.leaf_max);
  GalledBuilder builder{rng, {}, 0};
  std::vector<LabelIndex> all;
  for (int i = 0; i < n; ++i) all.push_back(static_cast<LabelIndex>(i));
  builder.build(std::move(all));
  return cluster_system(Dag::validate(builder.in));
}

// Grounded system repaired until no three members pairwise overlap: each
// repair drops one member of a witnessed triple (overlapping members can
// never be singletons, so groundedness survives).
SetSystem gen_n3o(Rng& rng, const GenParams& p) {
  SetSystem sys = gen_grounded(rng, p);
  for (;;) {
    StructureReport rep = classify_structure(sys);
    if (rep.n3o) return sys;
    const std::vector<LabelSet>& triple = rep.witnesses.at("n3o");
    sys = sys.without(triple[static_cast<std::size_t>(rng.below(3))]);
  }
}

SetSystem gen_system_core(Rng& rng, const GenParams& p) {
  switch (p.flavor) {
    case Flavor::tree_like_system:
      return gen_tree_like(rng, p);
    case Flavor::galled_tree_like_system:
      return gen_galled_like(rng, p);
    case Flavor::n3o_system:
      return gen_n3o(rng, p);
    default:
      return gen_grounded(rng, p);
  }
}

// --- decorations ----------------------------------------------------------

// Adds chain vertices above the roots and extra edges pointing strictly
// below their tail. Neither kind changes the order, the clusters, or any lca
// set: chain vertices sit above everything a root reaches and are never
// minimal common ancestors, and an edge to an already-reachable vertex is
// redundant for reachability (it merely becomes a shortcut).
Dag decorate(const Dag& base, Rng& rng, double density) {
  DagInput in;
  in.vertices = base.vertex_ids();
  in.edges = base.edge_list();
  for (VertexId leaf : base.leaves()) in.leaf_labels[leaf] = *base.label_of(leaf);
  VertexId next = base.vertex_ids().back() + 1;

  for (VertexId root : base.roots()) {
    if (!rng.chance(density)) continue;
    int links = rng.range(1, 2);
    VertexId lower = root;
    for (int i = 0; i < links; ++i) {
      VertexId c = next++;
      in.vertices.push_back(c);
      in.edges.emplace_back(c, lower);
      lower = c;
    }
  }

  int added = 0;
  for (VertexId u : base.vertex_ids()) {
    if (base.out_degree(u) == 0) continue;
    for (VertexId w : base.vertex_ids()) {
      if (added >= 4) break;
      if (w == u || base.has_edge(u, w) || !base.lt(w, u)) continue;
      if (rng.chance(density * 0.25)) {
        in.edges.emplace_back(u, w);
        ++added;
      }
    }
  }
  return Dag::validate(in);
}

[[noreturn]] void broken_guarantee(const char* flavor) {
  throw std::logic_error(std::string("generator delivered a ") + flavor +
                         " instance that fails its promised guarantee");
}

}  // namespace

Dag gen_dag(const GenParams& params) {
  validate_params(params);
  Rng rng(params.seed);
  switch (params.flavor) {
    case Flavor::arbitrary_dag:
      return gen_arbitrary(rng, params);
    case Flavor::pcc_dag: {
      SetSystem sys = gen_grounded(rng, params);
      Dag d = decorate(singleton_relabeled_hasse(sys), rng, params.edge_density);
      if (!is_pcc(d).holds) broken_guarantee("pcc");
      return d;
    }
    case Flavor::property_dag: {
      SetSystem sys = gen_closed_clustering(rng, params);
      SizeIndex idx = SizeIndex::with_one(params.sizes);
      Dag d = decorate(realize_with_property(sys, idx, RealizeDemand::property), rng,
                       params.edge_density);
      if (!has_i_lca_property(d, idx).holds) broken_guarantee("unique-lca");
      return d;
    }
    case Flavor::tree_like_system:
    case Flavor::galled_tree_like_system:
    case Flavor::n3o_system:
    case Flavor::grounded_system: {
      SetSystem sys = gen_system_core(rng, params);
      Dag d = decorate(singleton_relabeled_hasse(sys), rng, params.edge_density);
      if (!(cluster_system(d) == sys)) broken_guarantee("system-backed");
      return d;
    }
  }
  infeasible("unknown flavor");
}

SetSystem gen_system(const GenParams& params) {
  validate_params(params);
  switch (params.flavor) {
    case Flavor::arbitrary_dag:
    case Flavor::pcc_dag:
    case Flavor::property_dag:
      return cluster_system(gen_dag(params));
    default:
      break;
  }
  Rng rng(params.seed);
  SetSystem sys = gen_system_core(rng, params);
  StructureReport rep = classify_structure(sys);
  switch (params.flavor) {
    case Flavor::tree_like_system:
      if (!rep.tree_like) broken_guarantee("tree-like");
      break;
    case Flavor::galled_tree_like_system:
      if (!rep.galled_tree_like) broken_guarantee("galled-tree-like");
      break;
    case Flavor::n3o_system:
      if (!rep.n3o) broken_guarantee("3-overlap-free");
      break;
    default:
      if (!rep.grounded) broken_guarantee("grounded");
      break;
  }
  return sys;
}

namespace detail {

RawGraph ominus_sequential(RawGraph g, const std::vector<VertexId>& order) {
  for (VertexId victim : order) {
    std::vector<VertexId> parents, children;
    std::vector<std::pair<VertexId, VertexId>> kept;
    for (const auto& e : g.edges) {
      if (e.first == victim && e.second == victim) continue;
      if (e.second == victim)
        parents.push_back(e.first);
      else if (e.first == victim)
        children.push_back(e.second);
      else
        kept.push_back(e);
    }
    for (VertexId p : parents)
      for (VertexId c : children) kept.emplace_back(p, c);
    std::sort(kept.begin(), kept.end());
    kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
    g.edges = std::move(kept);
    g.vertices.erase(std::remove(g.vertices.begin(), g.vertices.end(), victim),
                     g.vertices.end());
  }
  return g;
}

}  // namespace detail

}  // namespace lcadag
