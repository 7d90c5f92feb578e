// Copyright (c) lcadag contributors.
// SPDX-License-Identifier: Apache-2.0
#include "lcadag/lca.hpp"

#include <algorithm>
#include <stdexcept>

#include "lcadag/errors.hpp"

namespace lcadag {

namespace {

LabelSet to_indices(const Dag& dag, const std::vector<std::string>& labels) {
  LabelSet a;
  a.reserve(labels.size());
  const auto& alphabet = dag.alphabet();
  for (const auto& label : labels) {
    auto it = std::lower_bound(alphabet.begin(), alphabet.end(), label);
    if (it == alphabet.end() || *it != label) {
      Error err(ErrorKind::UnknownLabel, "label \"" + label + "\" is not in the alphabet");
      err.labels.push_back(label);
      throw err;
    }
    a.push_back(static_cast<LabelIndex>(it - alphabet.begin()));
  }
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

}  // namespace

std::vector<VertexId> lca_set(const Dag& dag, const LabelSet& a) {
  if (a.empty()) {
    throw Error(ErrorKind::EmptySet, "the lca of the empty set is not defined");
  }
  if (!a.empty() && a.back() >= dag.alphabet().size()) {
    Error err(ErrorKind::UnknownLabel,
              "label index " + std::to_string(a.back()) + " is outside the alphabet");
    throw err;
  }
  // Common ancestors: vertices whose cluster contains a.
  std::vector<VertexId> common;
  for (VertexId v : dag.vertex_ids()) {
    if (is_subset(a, dag.cluster(v))) common.push_back(v);
  }
  // Keep the ⪯-minimal ones.
  std::vector<VertexId> minimal;
  for (VertexId v : common) {
    bool has_lower = false;
    for (VertexId u : common) {
      if (u != v && dag.leq(u, v)) {
        has_lower = true;
        break;
      }
    }
    if (!has_lower) minimal.push_back(v);
  }
  return minimal;  // ascending: vertex_ids() is ascending and filters keep order
}

std::vector<VertexId> lca_set(const Dag& dag, const std::vector<std::string>& labels) {
  return lca_set(dag, to_indices(dag, labels));
}

std::vector<VertexId> lca_set(const Dag& dag, std::initializer_list<const char*> labels) {
  return lca_set(dag, std::vector<std::string>(labels.begin(), labels.end()));
}

VertexId unique_lca(const Dag& dag, const LabelSet& a) {
  std::vector<VertexId> set = lca_set(dag, a);
  if (set.size() != 1) {
    Error err(ErrorKind::NotWellDefined,
              "the set " + render_label_set(a, dag.alphabet()) + " has " +
                  std::to_string(set.size()) + " minimal common ancestors");
    err.vertices = std::move(set);
    throw err;
  }
  return set.front();
}

VertexId unique_lca(const Dag& dag, const std::vector<std::string>& labels) {
  return unique_lca(dag, to_indices(dag, labels));
}

VertexId unique_lca(const Dag& dag, std::initializer_list<const char*> labels) {
  return unique_lca(dag, std::vector<std::string>(labels.begin(), labels.end()));
}

IlcaClassification i_lca_vertices(const Dag& dag, const SizeIndex& index, std::uint64_t cap) {
  IlcaClassification out;
  for_each_index_subset(dag.alphabet().size(), index, cap, [&](const LabelSet& a) {
    std::vector<VertexId> set = lca_set(dag, a);
    if (set.size() == 1 && !out.witness.count(set.front())) {
      out.witness[set.front()] = a;
    }
    return true;
  });
  for (VertexId v : dag.vertex_ids()) {
    if (!out.witness.count(v)) out.non_lca.push_back(v);
  }
  return out;
}

RelevanceResult is_i_lca_relevant(const Dag& dag, const SizeIndex& index, std::uint64_t cap) {
  RelevanceResult r;
  r.non_lca = i_lca_vertices(dag, index, cap).non_lca;
  r.holds = r.non_lca.empty();
  return r;
}

LcaPropertyResult has_i_lca_property(const Dag& dag, const SizeIndex& index,
                                     std::uint64_t cap) {
  if (!index.requires_one()) {
    throw std::invalid_argument("the lca property is defined for 1-containing size sets");
  }
  LcaPropertyResult r;
  r.holds = true;
  for_each_index_subset(dag.alphabet().size(), index, cap, [&](const LabelSet& a) {
    std::vector<VertexId> set = lca_set(dag, a);
    if (set.size() != 1) {
      r.holds = false;
      r.witness = a;
      r.witness_lcas = std::move(set);
      return false;
    }
    return true;
  });
  return r;
}

}  // namespace lcadag
