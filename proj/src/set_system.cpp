// Copyright (c) lcadag contributors.
// SPDX-License-Identifier: Apache-2.0
#include "lcadag/set_system.hpp"

#include <algorithm>
#include <map>

#include "lcadag/errors.hpp"

namespace lcadag {

namespace {

// Index of `label` in the sorted alphabet, or throw.
LabelIndex index_of(const std::vector<std::string>& ground, const std::string& label) {
  auto it = std::lower_bound(ground.begin(), ground.end(), label);
  if (it == ground.end() || *it != label) {
    Error err(ErrorKind::UnknownLabel, "unknown label \"" + label + "\"");
    err.labels.push_back(label);
    throw err;
  }
  return static_cast<LabelIndex>(it - ground.begin());
}

}  // namespace

SetSystem::SetSystem(std::vector<std::string> ground, std::vector<LabelSet> members) {
  if (ground.empty()) {
    throw Error(ErrorKind::EmptyGround, "a set system needs a nonempty ground set");
  }
  std::sort(ground.begin(), ground.end());
  auto dup = std::adjacent_find(ground.begin(), ground.end());
  if (dup != ground.end()) {
    Error err(ErrorKind::DuplicateLabel, "ground label \"" + *dup + "\" listed twice");
    err.labels.push_back(*dup);
    throw err;
  }
  for (LabelSet& m : members) {
    std::sort(m.begin(), m.end());
    auto d = std::adjacent_find(m.begin(), m.end());
    if (d != m.end()) {
      Error err(ErrorKind::DuplicateLabel,
                "label \"" + ground[*d] + "\" listed twice in one set");
      err.labels.push_back(ground[*d]);
      throw err;
    }
    if (!m.empty() && m.back() >= ground.size()) {
      Error err(ErrorKind::UnknownLabel,
                "label index " + std::to_string(m.back()) + " is outside the ground set");
      throw err;
    }
  }
  std::sort(members.begin(), members.end(), canonical_less);
  members.erase(std::unique(members.begin(), members.end()), members.end());
  ground_ = std::move(ground);
  members_ = std::move(members);
}

SetSystem SetSystem::from_labels(std::vector<std::string> ground,
                                 const std::vector<std::vector<std::string>>& sets) {
  if (ground.empty()) {
    throw Error(ErrorKind::EmptyGround, "a set system needs a nonempty ground set");
  }
  std::sort(ground.begin(), ground.end());
  std::vector<LabelSet> members;
  members.reserve(sets.size());
  for (const auto& set : sets) {
    LabelSet m;
    m.reserve(set.size());
    for (const auto& label : set) m.push_back(index_of(ground, label));
    members.push_back(std::move(m));
  }
  return SetSystem(std::move(ground), std::move(members));
}

SetSystem SetSystem::power_set(std::vector<std::string> ground) {
  if (ground.empty()) {
    throw Error(ErrorKind::EmptyGround, "a set system needs a nonempty ground set");
  }
  if (ground.size() > 20) {
    throw Error(ErrorKind::ResourceLimit, "power set over more than 20 labels refused");
  }
  std::size_t n = ground.size();
  std::vector<LabelSet> members;
  members.reserve((std::size_t{1} << n) - 1);
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    LabelSet m;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::size_t{1} << i)) m.push_back(static_cast<LabelIndex>(i));
    }
    members.push_back(std::move(m));
  }
  return SetSystem(std::move(ground), std::move(members));
}

bool SetSystem::contains(const LabelSet& s) const {
  return std::binary_search(members_.begin(), members_.end(), s, canonical_less);
}

SetSystem SetSystem::without(const LabelSet& s) const {
  std::vector<LabelSet> members = members_;
  members.erase(std::remove(members.begin(), members.end(), s), members.end());
  return SetSystem(ground_, std::move(members));
}

LabelSet SetSystem::to_index_set(const std::vector<std::string>& labels) const {
  LabelSet out;
  out.reserve(labels.size());
  for (const auto& label : labels) out.push_back(index_of(ground_, label));
  std::sort(out.begin(), out.end());
  auto d = std::adjacent_find(out.begin(), out.end());
  if (d != out.end()) {
    Error err(ErrorKind::DuplicateLabel, "label \"" + ground_[*d] + "\" listed twice");
    err.labels.push_back(ground_[*d]);
    throw err;
  }
  return out;
}

std::string SetSystem::render(const LabelSet& s) const {
  return render_label_set(s, ground_);
}

SystemFlags validate_system(const SetSystem& sys) {
  SystemFlags flags;
  flags.grounded = true;
  for (LabelIndex i = 0; i < sys.ground().size(); ++i) {
    if (!sys.contains(LabelSet{i})) flags.grounded = false;
  }
  for (const LabelSet& m : sys.members()) {
    if (m.empty()) flags.grounded = false;
  }
  LabelSet full(sys.ground().size());
  for (LabelIndex i = 0; i < full.size(); ++i) full[i] = i;
  flags.clustering = flags.grounded && sys.contains(full);
  return flags;
}

std::vector<LabelSet> minimal_supersets(const SetSystem& sys, const LabelSet& a) {
  std::vector<LabelSet> containing;
  for (const LabelSet& m : sys.members()) {
    if (is_subset(a, m)) containing.push_back(m);
  }
  std::vector<LabelSet> minimal;
  for (const LabelSet& m : containing) {
    bool has_smaller = false;
    for (const LabelSet& other : containing) {
      if (other != m && is_subset(other, m)) {
        has_smaller = true;
        break;
      }
    }
    if (!has_smaller) minimal.push_back(m);
  }
  return minimal;  // members are canonical already, filtering keeps the order
}

PreAryResult is_pre_i_ary(const SetSystem& sys, const SizeIndex& index, std::uint64_t cap) {
  PreAryResult result;
  result.holds = true;
  for_each_index_subset(sys.ground().size(), index, cap, [&](const LabelSet& a) {
    std::vector<LabelSet> minimal = minimal_supersets(sys, a);
    if (minimal.size() != 1) {
      result.holds = false;
      result.witness = a;
      result.witness_minimals = std::move(minimal);
      return false;
    }
    return true;
  });
  return result;
}

SetSystem ic_members(const SetSystem& sys, const SizeIndex& index, std::uint64_t cap) {
  std::vector<LabelSet> witnessed;
  for_each_index_subset(sys.ground().size(), index, cap, [&](const LabelSet& a) {
    std::vector<LabelSet> minimal = minimal_supersets(sys, a);
    if (minimal.size() == 1) witnessed.push_back(std::move(minimal.front()));
    return true;
  });
  return SetSystem(sys.ground(), std::move(witnessed));
}

AryResult is_i_ary(const SetSystem& sys, const SizeIndex& index, std::uint64_t cap) {
  AryResult result;
  result.pre = is_pre_i_ary(sys, index, cap);
  if (!result.pre.holds) return result;
  SetSystem witnessed = ic_members(sys, index, cap);
  for (const LabelSet& m : sys.members()) {
    if (!witnessed.contains(m)) result.unwitnessed.push_back(m);
  }
  result.holds = result.unwitnessed.empty();
  return result;
}

StructureReport classify_structure(const SetSystem& sys) {
  StructureReport report;
  SystemFlags flags = validate_system(sys);
  report.grounded = flags.grounded;
  report.clustering = flags.clustering;

  const std::vector<LabelSet>& ms = sys.members();
  std::size_t n = ms.size();

  report.tree_like = true;
  for (std::size_t i = 0; i < n && report.tree_like; ++i) {
    for (std::size_t j = i + 1; j < n && report.tree_like; ++j) {
      if (overlaps(ms[i], ms[j])) {
        report.tree_like = false;
        report.witnesses["tree_like"] = {ms[i], ms[j]};
      }
    }
  }

  report.n3o = true;
  for (std::size_t i = 0; i < n && report.n3o; ++i) {
    for (std::size_t j = i + 1; j < n && report.n3o; ++j) {
      if (!overlaps(ms[i], ms[j])) continue;
      for (std::size_t k = j + 1; k < n && report.n3o; ++k) {
        if (overlaps(ms[i], ms[k]) && overlaps(ms[j], ms[k])) {
          report.n3o = false;
          report.witnesses["n3o"] = {ms[i], ms[j], ms[k]};
        }
      }
    }
  }

  report.prop_l = true;
  for (std::size_t i = 0; i < n && report.prop_l; ++i) {
    for (std::size_t j = 0; j < n && report.prop_l; ++j) {
      if (!overlaps(ms[i], ms[j])) continue;
      for (std::size_t k = 0; k < n && report.prop_l; ++k) {
        if (!overlaps(ms[i], ms[k])) continue;
        if (set_intersection(ms[i], ms[j]) != set_intersection(ms[i], ms[k])) {
          report.prop_l = false;
          report.witnesses["prop_l"] = {ms[i], ms[j], ms[k]};
        }
      }
    }
  }

  report.closed = true;
  for (std::size_t i = 0; i < n && report.closed; ++i) {
    for (std::size_t j = i + 1; j < n && report.closed; ++j) {
      LabelSet inter = set_intersection(ms[i], ms[j]);
      if (!inter.empty() && !sys.contains(inter)) {
        report.closed = false;
        report.witnesses["closed"] = {ms[i], ms[j]};
      }
    }
  }

  report.galled_tree_like =
      report.clustering && report.closed && report.prop_l && report.n3o;

  for (const LabelSet& m : ms) {
    if (m.size() > 1) {
      report.non_trivial = true;
      int size = static_cast<int>(m.size());
      if (!report.kappa || size < *report.kappa) report.kappa = size;
    }
  }
  return report;
}

}  // namespace lcadag
