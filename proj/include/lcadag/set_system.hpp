// Copyright (c) lcadag contributors.
// SPDX-License-Identifier: Apache-2.0
#ifndef LCADAG_SET_SYSTEM_HPP
#define LCADAG_SET_SYSTEM_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lcadag/size_index.hpp"
#include "lcadag/types.hpp"

namespace lcadag {

// A finite family of subsets of a ground set of labels. Members are stored
// in canonical order (size, then lexicographic) and deduplicated. The empty
// set may appear as a member (such a system is simply not grounded); the
// ground set itself must be nonempty.
class SetSystem {
 public:
  // From pre-indexed members. Ground labels are sorted; member indices must
  // be valid against the *sorted* ground. Throws EmptyGround/UnknownLabel.
  SetSystem(std::vector<std::string> ground, std::vector<LabelSet> members);

  // From label strings. Unknown/duplicate labels inside a set throw.
  static SetSystem from_labels(std::vector<std::string> ground,
                               const std::vector<std::vector<std::string>>& sets);

  // All nonempty subsets of the ground set.
  static SetSystem power_set(std::vector<std::string> ground);

  const std::vector<std::string>& ground() const { return ground_; }
  const std::vector<LabelSet>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(const LabelSet& s) const;

  // Copy of this system without one member (no-op if absent). Convenience
  // for building fixture variants.
  SetSystem without(const LabelSet& s) const;

  LabelSet to_index_set(const std::vector<std::string>& labels) const;
  std::string render(const LabelSet& s) const;

  bool operator==(const SetSystem& other) const {
    return ground_ == other.ground_ && members_ == other.members_;
  }

 private:
  std::vector<std::string> ground_;   // sorted
  std::vector<LabelSet> members_;     // canonical order, deduplicated
};

struct SystemFlags {
  bool grounded = false;    // all singletons present, ∅ absent
  bool clustering = false;  // grounded and the full ground set is a member
};
SystemFlags validate_system(const SetSystem& sys);

// Inclusion-minimal members containing `a`, in canonical order. Empty when
// no member contains `a`.
std::vector<LabelSet> minimal_supersets(const SetSystem& sys, const LabelSet& a);

struct PreAryResult {
  bool holds = false;
  // First subset (canonical enumeration order) without a unique minimal
  // superset, plus the minimal supersets it actually has (possibly empty).
  std::optional<LabelSet> witness;
  std::vector<LabelSet> witness_minimals;
};
// Every subset of the ground set with size in `index` has exactly one
// inclusion-minimal superset among the members.
PreAryResult is_pre_i_ary(const SetSystem& sys, const SizeIndex& index,
                          std::uint64_t cap = default_enumeration_cap());

// The members that arise as *the* unique minimal superset of at least one
// subset with size in `index` (as a system over the same ground set).
SetSystem ic_members(const SetSystem& sys, const SizeIndex& index,
                     std::uint64_t cap = default_enumeration_cap());

struct AryResult {
  bool holds = false;
  PreAryResult pre;                  // the unique-minimal-superset half
  std::vector<LabelSet> unwitnessed; // members that are no subset's unique minimal superset
};
AryResult is_i_ary(const SetSystem& sys, const SizeIndex& index,
                   std::uint64_t cap = default_enumeration_cap());

// Structural classification of a set system.
struct StructureReport {
  bool grounded = false;
  bool clustering = false;
  bool tree_like = false;         // no two members overlap
  bool n3o = false;               // no three pairwise overlapping members
  bool prop_l = false;            // C1∩C2 = C1∩C3 whenever C1 overlaps both
  bool closed = false;            // nonempty pairwise intersections are members
  bool galled_tree_like = false;  // clustering ∧ closed ∧ prop_l ∧ n3o
  bool non_trivial = false;       // some member has size > 1
  std::optional<int> kappa;       // smallest member size > 1; absent when trivial
  // Offending sets per failed flag ("tree_like" → the overlapping pair,
  // "n3o" → the triple, "prop_l" → (C1, C2, C3), "closed" → the pair).
  std::map<std::string, std::vector<LabelSet>> witnesses;
};
StructureReport classify_structure(const SetSystem& sys);

}  // namespace lcadag

#endif
