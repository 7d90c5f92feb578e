// Copyright (c) lcadag contributors.
// SPDX-License-Identifier: Apache-2.0
#ifndef LCADAG_CORPUS_HPP
#define LCADAG_CORPUS_HPP

#include <functional>
#include <string>
#include <vector>

#include "lcadag/dag.hpp"
#include "lcadag/generator.hpp"

namespace lcadag {

// One verified law of the library: a named property that must hold on every
// generated instance. Ids:
//   shortcut-removal                 removing all shortcuts preserves order and
//                                    clusters, is idempotent, leaves none behind
//   shortcut-single-delete           deleting one shortcut keeps s0–s4 and
//                                    lca-relevance
//   property-implies-connected       unique-lca property with a size > 1 forces
//                                    weak connectivity
//   ominus-keeps-property            ⊖ of non-lca vertices keeps the unique-lca
//                                    property
//   relevant-property-ary            relevance + property make the clusters
//                                    fully witnessed for the index
//   n3o-lca-range                    without 3-overlaps, one witnessed size ≥ 2
//                                    forces every size up to the cluster size
//   n3o-full-subsystem               without 3-overlaps and a feasible size,
//                                    every cluster is witnessed
//   relevant-shortcut-free-regular   relevance makes the shortcut-free graph
//                                    isomorphic to its cluster cover digraph
//   property-implies-pre-ary         unique-lca property forces unique minimal
//                                    superset members
//   ominus-preservation              ⊖ of non-lca vertices satisfies s0–s4;
//                                    removing all of them yields relevance
//   pcc-property-equivalence         on PCC DAGs, unique-lca property ⟺ unique
//                                    minimal supersets
//   system-realization               grounded systems are realizable as cluster
//                                    systems iff pre-ary (relevantly iff ary)
//   simplify-hasse-isomorphism       simplification lands on the cover digraph
//                                    of the witnessed members
//   simplify-unique-w                the removed set is the only vertex set with
//                                    the preservation guarantees (exhaustive)
//   hasse-shape                      hierarchies give trees, galled-tree-like
//                                    systems give galled trees
//   simplify-tree                    tree-like clusters simplify to a
//                                    phylogenetic tree with equal clusters
//   simplify-galled                  galled-tree-like clusters simplify to a
//                                    phylogenetic galled tree with equal clusters
//   ominus-order-independence        path-based ⊖ equals sequential removal in
//                                    every order
std::vector<std::string> corpus_law_ids();

struct LawResult {
  std::string law;
  int trials = 0;
  int failures = 0;
  std::string first_counterexample;  // shrunk instance + context; empty when clean
  double millis = 0.0;
};

struct CorpusReport {
  std::vector<LawResult> laws;
  bool all_passed() const;
  std::string to_text() const;
};

// Runs `trials` independent seeded instances of every requested law (ids as
// above; unknown ids throw std::invalid_argument). Trial t of a law derives
// its rng from (params.seed, law, t), so reports are reproducible and the
// first counterexample is deterministic regardless of execution order.
// Failing instances are shrunk greedily before reporting.
CorpusReport check_corpus(const std::vector<std::string>& laws, const GenParams& params,
                          int trials);

namespace detail {
// Greedy instance minimization: repeatedly drop a vertex (skipping removals
// that break validity) while the failure predicate keeps failing. Exposed
// for direct testing; `still_fails` must be a pure function of the DAG.
Dag shrink_dag(const Dag& dag, const std::function<bool(const Dag&)>& still_fails);
SetSystem shrink_system(const SetSystem& sys,
                        const std::function<bool(const SetSystem&)>& still_fails);
}  // namespace detail

}  // namespace lcadag

#endif
