// Copyright (c) lcadag contributors.
// SPDX-License-Identifier: Apache-2.0
#ifndef LCADAG_TYPES_HPP
#define LCADAG_TYPES_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace lcadag {

// Vertex identifiers are opaque integers supplied by the caller and are
// preserved by every operation that keeps a vertex alive.
using VertexId = std::int64_t;

// Index of a label in a sorted ground alphabet.
using LabelIndex = std::uint32_t;

// A set of labels, represented as strictly increasing indices into the
// alphabet it belongs to. Two LabelSets are only comparable when they refer
// to the same alphabet.
using LabelSet = std::vector<LabelIndex>;

// a ⊆ b. Both arguments must be sorted.
bool is_subset(const LabelSet& a, const LabelSet& b);

LabelSet set_intersection(const LabelSet& a, const LabelSet& b);
LabelSet set_union(const LabelSet& a, const LabelSet& b);
LabelSet set_difference(const LabelSet& a, const LabelSet& b);

// Nonempty intersection and neither side contains the other.
bool overlaps(const LabelSet& a, const LabelSet& b);

// The ordering used for all set-valued output: by size first, then
// lexicographically. With a sorted alphabet this equals ordering by size,
// then by the label strings themselves.
bool canonical_less(const LabelSet& a, const LabelSet& b);

// "{a,b,c}" rendering against an alphabet.
std::string render_label_set(const LabelSet& s, const std::vector<std::string>& alphabet);

}  // namespace lcadag

#endif
