// Copyright (c) lcadag contributors.
// SPDX-License-Identifier: Apache-2.0
#ifndef LCADAG_ERRORS_HPP
#define LCADAG_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "lcadag/types.hpp"

namespace lcadag {

enum class ErrorKind {
  // graph validation
  Cyclic,           // a directed cycle exists; `vertices` holds one cycle in order
  SelfLoop,         // an edge (v, v); `vertices` = {v}
  EmptyGraph,       // no vertices at all
  UnlabeledLeaf,    // out-degree-0 vertex without a label; `vertices` names it
  LabeledInternal,  // label attached to a vertex with out-degree > 0
  DuplicateLabel,   // the same label on two vertices (or twice in one set)
  DuplicateVertex,  // the same vertex id listed twice
  UnknownVertex,    // reference to a vertex id that does not exist
  // labels / systems
  UnknownLabel,   // reference to a label outside the alphabet
  EmptyGround,    // set system over an empty ground set
  EmptySystem,    // Hasse diagram of zero members requested
  DuplicateMember,// the same member set listed twice in a document
  EmptySet,       // an operation was handed ∅ where a nonempty set is required
  LabelMismatch,  // two DAGs expected to share an alphabet do not
  // lca / enumeration
  NotWellDefined, // |lca set| != 1; `vertices` holds the full lca set
  ResourceLimit,  // subset enumeration would exceed the configured cap
  // transforms / construction
  RemovesEverything, // ⊖ would erase every vertex
  NotGrounded,       // singleton-relabeled Hasse requested but a minimal member is not a singleton
  NotPreIAry,        // realization requires the unique-minimal-superset hypothesis
  NotIAry,           // realization requires the stronger witnessed-member hypothesis
  InfeasibleParams,  // generator parameters describe an empty search space
  // input documents
  SyntaxError,  // malformed document; `line`/`column` point at the offense
};

const char* to_string(ErrorKind kind);

// Single exception type for all domain errors. `kind()` is the stable,
// testable discriminator; the payload vectors carry the witness (meaning
// depends on the kind, see the enum comments).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  std::vector<VertexId> vertices;
  std::vector<std::string> labels;
  int line = 0;
  int column = 0;

 private:
  ErrorKind kind_;
};

}  // namespace lcadag

#endif
