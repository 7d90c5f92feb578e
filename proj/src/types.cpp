// Copyright (c) lcadag contributors.
// SPDX-License-Identifier: Apache-2.0
#include "lcadag/types.hpp"

#include <algorithm>

#include "lcadag/errors.hpp"

namespace lcadag {

bool is_subset(const LabelSet& a, const LabelSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

LabelSet set_intersection(const LabelSet& a, const LabelSet& b) {
  LabelSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

LabelSet set_union(const LabelSet& a, const LabelSet& b) {
  LabelSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

LabelSet set_difference(const LabelSet& a, const LabelSet& b) {
  LabelSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool overlaps(const LabelSet& a, const LabelSet& b) {
  return !set_intersection(a, b).empty() && !is_subset(a, b) && !is_subset(b, a);
}

bool canonical_less(const LabelSet& a, const LabelSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

std::string render_label_set(const LabelSet& s, const std::vector<std::string>& alphabet) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += alphabet.at(s[i]);
  }
  out += "}";
  return out;
}

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Cyclic: return "Cyclic";
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::EmptyGraph: return "EmptyGraph";
    case ErrorKind::UnlabeledLeaf: return "UnlabeledLeaf";
    case ErrorKind::LabeledInternal: return "LabeledInternal";
    case ErrorKind::DuplicateLabel: return "DuplicateLabel";
    case ErrorKind::DuplicateVertex: return "DuplicateVertex";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::UnknownLabel: return "UnknownLabel";
    case ErrorKind::EmptyGround: return "EmptyGround";
    case ErrorKind::EmptySystem: return "EmptySystem";
    case ErrorKind::DuplicateMember: return "DuplicateMember";
    case ErrorKind::EmptySet: return "EmptySet";
    case ErrorKind::LabelMismatch: return "LabelMismatch";
    case ErrorKind::NotWellDefined: return "NotWellDefined";
    case ErrorKind::ResourceLimit: return "ResourceLimit";
    case ErrorKind::RemovesEverything: return "RemovesEverything";
    case ErrorKind::NotGrounded: return "NotGrounded";
    case ErrorKind::NotPreIAry: return "NotPreIAry";
    case ErrorKind::NotIAry: return "NotIAry";
    case ErrorKind::InfeasibleParams: return "InfeasibleParams";
    case ErrorKind::SyntaxError: return "SyntaxError";
  }
  return "Unknown";
}

}  // namespace lcadag
