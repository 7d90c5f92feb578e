// Copyright (c) lcadag contributors.
// SPDX-License-Identifier: Apache-2.0
#include "lcadag/corpus.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lcadag/errors.hpp"
#include "lcadag/hasse.hpp"
#include "lcadag/io.hpp"
#include "lcadag/lca.hpp"
#include "lcadag/set_system.hpp"
#include "lcadag/transform.hpp"

namespace lcadag {
namespace {

// ---- deterministic trial seeding (portable: no std::hash) -----------------

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::uint64_t trial_seed(std::uint64_t base, const std::string& law, int trial) {
  return mix64(base ^ mix64(fnv1a(law) + static_cast<std::uint64_t>(trial) *
                                             0x9e3779b97f4a7c15ULL));
}

// ---- shared helpers --------------------------------------------------------

GenParams flavored(const GenParams& base, Flavor flavor, std::uint64_t seed) {
  GenParams p = base;
  p.flavor = flavor;
  p.seed = seed;
  return p;
}

GenParams property_params(const GenParams& base, std::uint64_t seed) {
  GenParams p = flavored(base, Flavor::property_dag, seed);
  p.sizes.push_back(1);
  return p;
}

SizeIndex one_index(const GenParams& base) {
  std::vector<int> sizes = base.sizes;
  sizes.push_back(1);
  return SizeIndex::with_one(std::move(sizes));
}

std::string dag_text(const Dag& dag) { return serialize(DagDocument{1, dag, {}}); }
std::string sys_text(const SetSystem& sys) { return serialize(SystemDocument{1, sys, {}}); }

std::string dag_failure(const std::string& what, const Dag& instance,
                        const std::function<bool(const Dag&)>& still_fails) {
  return what + "\n" + dag_text(detail::shrink_dag(instance, still_fails));
}

std::string sys_failure(const std::string& what, const SetSystem& instance,
                        const std::function<bool(const SetSystem&)>& still_fails) {
  return what + "\n" + sys_text(detail::shrink_system(instance, still_fails));
}

std::vector<VertexId> pick_subset(Rng& rng, const std::vector<VertexId>& pool, double prob) {
  std::vector<VertexId> out;
  for (VertexId v : pool)
    if (rng.chance(prob)) out.push_back(v);
  return out;
}

// Vertex-to-cluster maps are injective on regular DAGs, so cluster-wise
// correspondence of vertices and edges is a full isomorphism check here.
bool isomorphic_by_clusters(const Dag& a, const Dag& b) {
  if (a.alphabet() != b.alphabet()) return false;
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  std::map<LabelSet, VertexId> of_a, of_b;
  for (VertexId v : a.vertex_ids())
    if (!of_a.emplace(a.cluster(v), v).second) return false;
  for (VertexId v : b.vertex_ids())
    if (!of_b.emplace(b.cluster(v), v).second) return false;
  for (const auto& [cluster, v] : of_a)
    if (!of_b.count(cluster)) return false;
  for (const auto& [u, w] : a.edge_list())
    if (!b.has_edge(of_b.at(a.cluster(u)), of_b.at(a.cluster(w)))) return false;
  return true;
}

// ---- the laws --------------------------------------------------------------

bool shortcut_removal_violated(const Dag& d) {
  Dag r = d.remove_shortcuts();
  if (r.vertex_ids() != d.vertex_ids()) return true;
  for (VertexId u : d.vertex_ids()) {
    if (d.cluster(u) != r.cluster(u)) return true;
    for (VertexId v : d.vertex_ids())
      if (d.leq(u, v) != r.leq(u, v)) return true;
  }
  if (!r.shortcuts().empty()) return true;
  return r.remove_shortcuts() != r;
}

std::optional<std::string> law_shortcut_removal(std::uint64_t seed, const GenParams& base) {
  Dag g = gen_dag(flavored(base, Flavor::arbitrary_dag, seed));
  if (!shortcut_removal_violated(g)) return std::nullopt;
  return dag_failure(
      "removing every shortcut must keep the vertex set, the order, and the clusters, "
      "leave no shortcut behind, and be idempotent",
      g, shortcut_removal_violated);
}

std::optional<std::string> law_shortcut_single_delete(std::uint64_t seed,
                                                      const GenParams& base) {
  SizeIndex idx = one_index(base);
  std::uint64_t aux = mix64(seed ^ 0x51c0de1ULL);
  Dag g = gen_dag(flavored(base, Flavor::arbitrary_dag, seed));
  auto violated = [idx, aux](const Dag& d) -> bool {
    std::vector<std::pair<VertexId, VertexId>> cuts = d.shortcuts();
    if (cuts.empty()) return false;
    Rng pick(aux);
    std::pair<VertexId, VertexId> cut =
        cuts[static_cast<std::size_t>(pick.below(cuts.size()))];
    DagInput in;
    in.vertices = d.vertex_ids();
    for (const auto& e : d.edge_list())
      if (e != cut) in.edges.push_back(e);
    for (VertexId leaf : d.leaves()) in.leaf_labels[leaf] = *d.label_of(leaf);
    Dag h = Dag::validate(in);
    if (!verify_preservation(d, h, idx).all()) return true;
    bool lca_changed = false;
    for_each_index_subset(d.alphabet().size(), idx, default_enumeration_cap(),
                          [&](const LabelSet& a) {
                            if (lca_set(d, a) != lca_set(h, a)) {
                              lca_changed = true;
                              return false;
                            }
                            return true;
                          });
    if (lca_changed) return true;
    return is_i_lca_relevant(d, idx).holds != is_i_lca_relevant(h, idx).holds;
  };
  if (!violated(g)) return std::nullopt;
  return dag_failure(
      "deleting a single shortcut must preserve clusters, order, every lca set, "
      "and the relevance status",
      g, violated);
}

std::optional<std::string> law_property_connected(std::uint64_t seed, const GenParams& base) {
  SizeIndex idx = one_index(base);
  auto violated = [idx](const Dag& d) -> bool {
    bool feasible_above_one = false;
    for (int k : idx.sizes())
      if (k >= 2 && k <= static_cast<int>(d.alphabet().size())) feasible_above_one = true;
    if (!feasible_above_one) return false;
    if (!has_i_lca_property(d, idx).holds) return false;
    return !recognize_shape(d).connected;
  };
  Dag g = gen_dag(property_params(base, seed));
  if (violated(g))
    return dag_failure(
        "the unique-lca property with a feasible size above one must force connectivity", g,
        violated);
  Dag a = gen_dag(flavored(base, Flavor::arbitrary_dag, mix64(seed ^ 0xc0ffeeULL)));
  if (violated(a))
    return dag_failure(
        "the unique-lca property with a feasible size above one must force connectivity", a,
        violated);
  return std::nullopt;
}

std::optional<std::string> law_ominus_keeps_property(std::uint64_t seed,
                                                     const GenParams& base) {
  SizeIndex idx = one_index(base);
  std::uint64_t aux = mix64(seed ^ 0x0b5e55edULL);
  Dag g = gen_dag(property_params(base, seed));
  auto violated = [idx, aux](const Dag& d) -> bool {
    if (!has_i_lca_property(d, idx).holds) return false;
    Rng pick(aux);
    std::vector<VertexId> w = pick_subset(pick, i_lca_vertices(d, idx).non_lca, 0.5);
    return !has_i_lca_property(ominus(d, w), idx).holds;
  };
  if (!violated(g)) return std::nullopt;
  return dag_failure("removing non-lca vertices must keep the unique-lca property", g,
                     violated);
}

std::optional<std::string> law_relevant_property_ary(std::uint64_t seed,
                                                     const GenParams& base) {
  SizeIndex idx = one_index(base);
  Dag g = gen_dag(property_params(base, seed));
  auto violated = [idx](const Dag& d) -> bool {
    if (!has_i_lca_property(d, idx).holds) return false;
    SimplificationResult r = simplify(d, idx);
    return !is_i_ary(cluster_system(r.reduced), idx).holds;
  };
  if (!violated(g)) return std::nullopt;
  return dag_failure(
      "a relevant result of lca-respecting removal must have fully witnessed clusters", g,
      violated);
}

std::optional<std::string> law_n3o_lca_range(std::uint64_t seed, const GenParams& base) {
  Dag g = gen_dag(flavored(base, Flavor::n3o_system, seed));
  auto violated = [](const Dag& d) -> bool {
    if (!classify_structure(cluster_system(d)).n3o) return false;
    std::size_t n = d.alphabet().size();
    std::map<VertexId, std::set<int>> witnessed;
    for (int k = 2; k <= static_cast<int>(n); ++k) {
      IlcaClassification cls = i_lca_vertices(d, SizeIndex::of({k}));
      for (const auto& [v, subset] : cls.witness) witnessed[v].insert(k);
    }
    for (VertexId v : d.vertex_ids()) {
      if (d.out_degree(v) == 0) continue;
      int cs = static_cast<int>(d.cluster(v).size());
      auto it = witnessed.find(v);
      bool some = it != witnessed.end() && !it->second.empty();
      bool every = cs >= 2;
      for (int l = 2; every && l <= cs; ++l)
        if (it == witnessed.end() || !it->second.count(l)) every = false;
      if (some != every) return true;
    }
    return false;
  };
  if (!violated(g)) return std::nullopt;
  return dag_failure(
      "without 3-overlaps, one witnessed size above one must give every size up to the "
      "cluster size",
      g, violated);
}

std::optional<std::string> law_n3o_full_subsystem(std::uint64_t seed, const GenParams& base) {
  std::uint64_t aux = mix64(seed ^ 0x3a11edULL);
  SetSystem sys = gen_system(flavored(base, Flavor::n3o_system, seed));
  auto violated = [aux](const SetSystem& s) -> bool {
    StructureReport rep = classify_structure(s);
    if (!rep.grounded || !rep.n3o || !rep.kappa) return false;
    Rng pick(aux);
    int k = pick.range(2, *rep.kappa);
    return !(ic_members(s, SizeIndex::with_one({1, k})) == s);
  };
  if (!violated(sys)) return std::nullopt;
  return sys_failure(
      "in a grounded system without 3-overlaps, a feasible size up to the smallest "
      "non-singleton member must witness every member",
      sys, violated);
}

std::optional<std::string> law_relevant_regular(std::uint64_t seed, const GenParams& base) {
  SizeIndex idx = one_index(base);
  Dag g = gen_dag(flavored(base, Flavor::arbitrary_dag, seed));
  auto violated = [idx](const Dag& d) -> bool {
    SimplificationResult r = simplify(d, idx);
    if (!is_i_lca_relevant(r.reduced, idx).holds) return true;
    return !is_regular(r.reduced_shortcut_free).holds;
  };
  if (!violated(g)) return std::nullopt;
  return dag_failure(
      "a relevant graph stripped of shortcuts must match its cluster cover digraph", g,
      violated);
}

std::optional<std::string> law_property_pre_ary(std::uint64_t seed, const GenParams& base) {
  SizeIndex idx = one_index(base);
  Dag g = gen_dag(property_params(base, seed));
  auto violated = [idx](const Dag& d) -> bool {
    if (!has_i_lca_property(d, idx).holds) return false;
    return !is_pre_i_ary(cluster_system(d), idx).holds;
  };
  if (!violated(g)) return std::nullopt;
  return dag_failure(
      "the unique-lca property must give every small subset a unique minimal cluster "
      "superset",
      g, violated);
}

std::optional<std::string> law_ominus_preservation(std::uint64_t seed, const GenParams& base) {
  SizeIndex idx = one_index(base);
  std::uint64_t aux = mix64(seed ^ 0x9e5e7edULL);
  Dag g = gen_dag(flavored(base, Flavor::arbitrary_dag, seed));
  auto violated = [idx, aux](const Dag& d) -> bool {
    IlcaClassification cls = i_lca_vertices(d, idx);
    Rng pick(aux);
    std::vector<VertexId> w = pick_subset(pick, cls.non_lca, 0.5);
    if (!verify_preservation(d, ominus(d, w), idx).all()) return true;
    Dag full = ominus(d, cls.non_lca);
    if (!verify_preservation(d, full, idx).all()) return true;
    return !is_i_lca_relevant(full, idx).holds;
  };
  if (!violated(g)) return std::nullopt;
  return dag_failure(
      "removing non-lca vertices must preserve leaves, vertices, order, clusters, and "
      "well-defined lcas; removing all of them must leave every vertex witnessed",
      g, violated);
}

std::optional<std::string> law_pcc_equivalence(std::uint64_t seed, const GenParams& base) {
  SizeIndex idx = one_index(base);
  Dag g = gen_dag(flavored(base, Flavor::pcc_dag, seed));
  auto violated = [idx](const Dag& d) -> bool {
    if (!is_pcc(d).holds) return false;
    return has_i_lca_property(d, idx).holds != is_pre_i_ary(cluster_system(d), idx).holds;
  };
  if (!violated(g)) return std::nullopt;
  return dag_failure(
      "when comparability matches cluster nesting, the unique-lca property must coincide "
      "with unique minimal cluster supersets",
      g, violated);
}

std::optional<std::string> law_system_realization(std::uint64_t seed, const GenParams& base) {
  SizeIndex idx = one_index(base);
  SetSystem sys = gen_system(flavored(base, Flavor::grounded_system, seed));
  auto violated = [idx](const SetSystem& s) -> bool {
    if (!validate_system(s).grounded) return false;
    bool pre = is_pre_i_ary(s, idx).holds;
    bool ary = is_i_ary(s, idx).holds;
    try {
      Dag d = realize_with_property(s, idx, RealizeDemand::property);
      if (!pre) return true;
      if (!(cluster_system(d) == s)) return true;
      if (!has_i_lca_property(d, idx).holds) return true;
    } catch (const Error& e) {
      if (pre || e.kind() != ErrorKind::NotPreIAry) return true;
    }
    try {
      Dag d = realize_with_property(s, idx, RealizeDemand::relevant);
      if (!ary) return true;
      if (!(cluster_system(d) == s)) return true;
      if (!has_i_lca_property(d, idx).holds) return true;
      if (!is_i_lca_relevant(d, idx).holds) return true;
    } catch (const Error& e) {
      if (ary) return true;
      if (e.kind() != ErrorKind::NotPreIAry && e.kind() != ErrorKind::NotIAry) return true;
    }
    return false;
  };
  if (!violated(sys)) return std::nullopt;
  return sys_failure(
      "a grounded system must be realizable as a cluster system exactly when minimal "
      "supersets are unique (relevantly: when additionally every member is witnessed)",
      sys, violated);
}

std::optional<std::string> law_simplify_hasse_iso(std::uint64_t seed, const GenParams& base) {
  SizeIndex idx = one_index(base);
  Dag g = gen_dag(property_params(base, seed));
  auto violated = [idx](const Dag& d) -> bool {
    if (!has_i_lca_property(d, idx).holds) return false;
    SimplificationResult r = simplify(d, idx);
    SetSystem witnessed = ic_members(cluster_system(d), idx);
    if (!(cluster_system(r.reduced) == witnessed)) return true;
    return !isomorphic_by_clusters(r.reduced_shortcut_free,
                                   singleton_relabeled_hasse(witnessed));
  };
  if (!violated(g)) return std::nullopt;
  return dag_failure(
      "simplification must land on the cover digraph of the witnessed members", g, violated);
}

std::optional<std::string> law_simplify_unique_w(std::uint64_t seed, const GenParams& base) {
  SizeIndex idx = one_index(base);
  GenParams p = property_params(base, seed);
  // Exhaustive sweep: keep the instance small enough that every candidate
  // subset of internal vertices can be tried.
  p.leaf_min = 2;
  p.leaf_max = 3;
  p.internal_min = 0;
  p.internal_max = 2;
  Dag g = gen_dag(p);
  auto violated = [idx](const Dag& d) -> bool {
    if (d.vertex_count() > 10) return false;
    if (!has_i_lca_property(d, idx).holds) return false;
    const std::vector<VertexId>& pool = d.vertex_ids();
    std::vector<VertexId> expected = i_lca_vertices(d, idx).non_lca;
    int winners = 0;
    bool expected_wins = false;
    for (std::uint64_t mask = 0; mask < (1ULL << pool.size()); ++mask) {
      std::vector<VertexId> candidate;
      for (std::size_t i = 0; i < pool.size(); ++i)
        if (mask & (1ULL << i)) candidate.push_back(pool[i]);
      bool good = false;
      try {
        Dag h = ominus(d, candidate).remove_shortcuts();
        good = is_i_lca_relevant(h, idx).holds && verify_preservation(d, h, idx).all();
      } catch (const Error&) {
        good = false;
      }
      if (good) {
        ++winners;
        if (candidate == expected) expected_wins = true;
      }
    }
    return winners != 1 || !expected_wins;
  };
  if (!violated(g)) return std::nullopt;
  return dag_failure(
      "under the unique-lca property, exactly one removal set may give a relevant result "
      "with all preservation guarantees, and it must be the non-lca set",
      g, violated);
}

std::optional<std::string> law_hasse_shape(std::uint64_t seed, const GenParams& base) {
  SetSystem tree_sys = gen_system(flavored(base, Flavor::tree_like_system, seed));
  auto tree_violated = [](const SetSystem& s) -> bool {
    StructureReport rep = classify_structure(s);
    if (!rep.clustering || !rep.tree_like) return false;
    return !recognize_shape(singleton_relabeled_hasse(s)).tree;
  };
  if (tree_violated(tree_sys))
    return sys_failure("the cover digraph of a hierarchy must be a tree", tree_sys,
                       tree_violated);
  SetSystem galled_sys =
      gen_system(flavored(base, Flavor::galled_tree_like_system, mix64(seed ^ 0x9a11edULL)));
  auto galled_violated = [](const SetSystem& s) -> bool {
    StructureReport rep = classify_structure(s);
    if (!rep.galled_tree_like) return false;
    return !recognize_shape(singleton_relabeled_hasse(s)).galled_tree;
  };
  if (galled_violated(galled_sys))
    return sys_failure(
        "the cover digraph of a closed, 3-overlap-free system with aligned intersections "
        "must be a galled tree",
        galled_sys, galled_violated);
  return std::nullopt;
}

bool simplify_shape_violated(const Dag& d, std::uint64_t aux, bool want_tree) {
  StructureReport rep = classify_structure(cluster_system(d));
  bool shaped = want_tree ? rep.tree_like : rep.galled_tree_like;
  if (!shaped || !rep.kappa) return false;
  Rng pick(aux);
  int k = pick.range(2, *rep.kappa);
  SizeIndex idx = SizeIndex::with_one({1, k});
  if (!has_i_lca_property(d, idx).holds) return true;
  SimplificationResult r = simplify(d, idx);
  const Dag& result = r.reduced_shortcut_free;
  if (!is_phylogenetic(result).holds) return true;
  ShapeReport shape = recognize_shape(result);
  if (want_tree ? !shape.tree : !shape.galled_tree) return true;
  return !(cluster_system(result) == cluster_system(d));
}

std::optional<std::string> law_simplify_tree(std::uint64_t seed, const GenParams& base) {
  std::uint64_t aux = mix64(seed ^ 0x7ee5ULL);
  Dag g = gen_dag(flavored(base, Flavor::tree_like_system, seed));
  auto violated = [aux](const Dag& d) { return simplify_shape_violated(d, aux, true); };
  if (!violated(g)) return std::nullopt;
  return dag_failure(
      "with hierarchy clusters and a feasible size, simplification must yield a "
      "phylogenetic tree with identical clusters",
      g, violated);
}

std::optional<std::string> law_simplify_galled(std::uint64_t seed, const GenParams& base) {
  std::uint64_t aux = mix64(seed ^ 0x9a11ULL);
  Dag g = gen_dag(flavored(base, Flavor::galled_tree_like_system, seed));
  auto violated = [aux](const Dag& d) { return simplify_shape_violated(d, aux, false); };
  if (!violated(g)) return std::nullopt;
  return dag_failure(
      "with galled-tree-like clusters and a feasible size, simplification must yield a "
      "phylogenetic galled tree with identical clusters",
      g, violated);
}

std::optional<std::string> law_order_independence(std::uint64_t seed, const GenParams& base) {
  std::uint64_t aux = mix64(seed ^ 0x0dedULL);
  Dag g = gen_dag(flavored(base, Flavor::arbitrary_dag, seed));
  auto violated = [aux](const Dag& d) -> bool {
    Rng pick(aux);
    std::vector<VertexId> w = pick_subset(pick, d.vertex_ids(), 0.3);
    if (w.size() == d.vertex_count()) w.pop_back();
    if (w.empty()) return false;
    detail::RawGraph raw{d.vertex_ids(), d.edge_list()};
    std::vector<VertexId> order1 = w, order2 = w;
    pick.shuffle(order1);
    pick.shuffle(order2);
    detail::RawGraph r1 = detail::ominus_sequential(raw, order1);
    detail::RawGraph r2 = detail::ominus_sequential(raw, order2);
    std::sort(r1.edges.begin(), r1.edges.end());
    std::sort(r2.edges.begin(), r2.edges.end());
    if (r1.vertices != r2.vertices || r1.edges != r2.edges) return true;
    try {
      Dag h = ominus(d, w);
      if (h.vertex_ids() != r1.vertices) return true;
      if (h.edge_list() != r1.edges) return true;
    } catch (const Error&) {
      // The survivors do not form a labeled DAG; the sequential result must
      // describe the same graph, hence fail validation as well.
      DagInput in;
      in.vertices = r1.vertices;
      in.edges = r1.edges;
      for (VertexId v : r1.vertices)
        if (auto label = d.label_of(v)) in.leaf_labels[v] = *label;
      try {
        Dag::validate(in);
        return true;
      } catch (const Error&) {
      }
    }
    return false;
  };
  if (!violated(g)) return std::nullopt;
  return dag_failure(
      "sequential vertex removal must give the same graph in every order, matching the "
      "path-based construction",
      g, violated);
}

// ---- registry (sorted by id) ----------------------------------------------

using LawFn = std::optional<std::string> (*)(std::uint64_t, const GenParams&);

struct LawEntry {
  const char* id;
  LawFn fn;
};

constexpr LawEntry kLaws[] = {
    {"hasse-shape", law_hasse_shape},
    {"n3o-full-subsystem", law_n3o_full_subsystem},
    {"n3o-lca-range", law_n3o_lca_range},
    {"ominus-keeps-property", law_ominus_keeps_property},
    {"ominus-order-independence", law_order_independence},
    {"ominus-preservation", law_ominus_preservation},
    {"pcc-property-equivalence", law_pcc_equivalence},
    {"property-implies-connected", law_property_connected},
    {"property-implies-pre-ary", law_property_pre_ary},
    {"relevant-property-ary", law_relevant_property_ary},
    {"relevant-shortcut-free-regular", law_relevant_regular},
    {"shortcut-removal", law_shortcut_removal},
    {"shortcut-single-delete", law_shortcut_single_delete},
    {"simplify-galled", law_simplify_galled},
    {"simplify-hasse-isomorphism", law_simplify_hasse_iso},
    {"simplify-tree", law_simplify_tree},
    {"simplify-unique-w", law_simplify_unique_w},
    {"system-realization", law_system_realization},
};

const LawEntry* find_law(const std::string& id) {
  for (const LawEntry& entry : kLaws)
    if (id == entry.id) return &entry;
  return nullptr;
}

}  // namespace

std::vector<std::string> corpus_law_ids() {
  std::vector<std::string> ids;
  for (const LawEntry& entry : kLaws) ids.emplace_back(entry.id);
  return ids;
}

bool CorpusReport::all_passed() const {
  for (const LawResult& lr : laws)
    if (lr.failures != 0) return false;
  return true;
}

std::string CorpusReport::to_text() const {
  std::string out;
  int failed_laws = 0;
  for (const LawResult& lr : laws) {
    char line[160];
    std::snprintf(line, sizeof line, "%-32s %5d trials  %5d failures  %8.1f ms\n",
                  lr.law.c_str(), lr.trials, lr.failures, lr.millis);
    out += line;
    if (lr.failures != 0) {
      ++failed_laws;
      out += "  first counterexample:\n";
      std::string indented = "    ";
      for (char c : lr.first_counterexample) {
        indented += c;
        if (c == '\n') indented += "    ";
      }
      out += indented;
      out += '\n';
    }
  }
  out += failed_laws == 0 ? "all laws passed\n"
                          : std::to_string(failed_laws) + " law(s) failed\n";
  return out;
}

CorpusReport check_corpus(const std::vector<std::string>& laws, const GenParams& params,
                          int trials) {
  CorpusReport report;
  for (const std::string& law : laws) {
    const LawEntry* entry = find_law(law);
    if (!entry) throw std::invalid_argument("unknown corpus law: " + law);
    LawResult lr;
    lr.law = law;
    auto start = std::chrono::steady_clock::now();
    for (int t = 0; t < trials; ++t) {
      std::uint64_t seed = trial_seed(params.seed, law, t);
      std::optional<std::string> failure;
      try {
        failure = entry->fn(seed, params);
      } catch (const std::exception& e) {
        failure = std::string("unexpected exception: ") + e.what();
      }
      ++lr.trials;
      if (failure) {
        ++lr.failures;
        if (lr.first_counterexample.empty())
          lr.first_counterexample =
              "trial " + std::to_string(t) + " (seed " + std::to_string(seed) + "): " + *failure;
      }
    }
    lr.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                          start)
                    .count();
    report.laws.push_back(std::move(lr));
  }
  return report;
}

namespace detail {

Dag shrink_dag(const Dag& dag, const std::function<bool(const Dag&)>& still_fails) {
  Dag current = dag;
  bool progress = true;
  while (progress) {
    progress = false;
    for (VertexId victim : current.vertex_ids()) {
      DagInput in;
      for (VertexId v : current.vertex_ids())
        if (v != victim) in.vertices.push_back(v);
      if (in.vertices.empty()) continue;
      for (const auto& e : current.edge_list())
        if (e.first != victim && e.second != victim) in.edges.push_back(e);
      for (VertexId leaf : current.leaves())
        if (leaf != victim) in.leaf_labels[leaf] = *current.label_of(leaf);
      try {
        Dag candidate = Dag::validate(in);
        if (still_fails(candidate)) {
          current = candidate;
          progress = true;
          break;
        }
      } catch (const Error&) {
      } catch (const std::exception&) {
      }
    }
  }
  return current;
}

SetSystem shrink_system(const SetSystem& sys,
                        const std::function<bool(const SetSystem&)>& still_fails) {
  SetSystem current = sys;
  bool progress = true;
  while (progress) {
    progress = false;
    for (const LabelSet& member : current.members()) {
      SetSystem candidate = current.without(member);
      if (candidate.size() == current.size()) continue;
      bool fails = false;
      try {
        fails = still_fails(candidate);
      } catch (const std::exception&) {
      }
      if (fails) {
        current = candidate;
        progress = true;
        break;
      }
    }
  }
  return current;
}

}  // namespace detail

}  // namespace lcadag
