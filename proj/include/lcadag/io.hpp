// Copyright (c) lcadag contributors.
// SPDX-License-Identifier: Apache-2.0
#ifndef LCADAG_IO_HPP
#define LCADAG_IO_HPP

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "lcadag/dag.hpp"
#include "lcadag/set_system.hpp"

namespace lcadag {

// A DAG document: the graph plus free-form string metadata. JSON schema:
//   { "format_version": 1,
//     "vertices": [ {"id": 0, "label": "a"}, {"id": 6} ],
//     "edges": [ [6, 0], ... ],
//     "metadata": { "name": "..." } }            (metadata optional)
// Serialization is canonical (sorted vertices/edges/keys, two-space indent,
// trailing newline), so serialize ∘ parse is a fixpoint and parse ∘
// serialize is the identity.
struct DagDocument {
  int format_version = 1;
  Dag dag;
  std::map<std::string, std::string> metadata;
  bool operator==(const DagDocument& o) const {
    return format_version == o.format_version && dag == o.dag && metadata == o.metadata;
  }
};

// A set-system document. JSON schema:
//   { "format_version": 1,
//     "ground": ["a","b","c"],
//     "sets": [ ["a"], ["a","b"], ... ] }
struct SystemDocument {
  int format_version = 1;
  SetSystem system;
  std::map<std::string, std::string> metadata;
  bool operator==(const SystemDocument& o) const {
    return format_version == o.format_version && system == o.system && metadata == o.metadata;
  }
};

// Parses either format. DAG input may be JSON (first non-space byte '{') or
// the terse edge-list text form:
//     # comment
//     rho u / rho c
//     u a
//     u b
//     leaves: a b c
// Vertex names map to ids in order of first appearance; the optional
// `leaves:` line declares the labeled vertices (labels = their names),
// defaulting to every sink. Malformed input throws Error(SyntaxError) with
// line/column; structural problems surface as validation errors.
DagDocument parse_dag_document(std::string_view text);
SystemDocument parse_system_document(std::string_view text);

std::string serialize(const DagDocument& doc);
std::string serialize(const SystemDocument& doc);

// Graphviz export. Deterministic: vertices ascending, then edges ascending.
// Leaves show their label, internal vertices their id. Shortcut edges are
// always drawn dashed. `show_clusters` adds each vertex's cluster to its
// node label; `highlight` fills the given vertices (the usual use is the
// removed set W of a simplification).
struct DotOptions {
  bool show_clusters = false;
  std::vector<VertexId> highlight;
};
std::string export_dot(const Dag& dag, const DotOptions& options = {});

}  // namespace lcadag

#endif
