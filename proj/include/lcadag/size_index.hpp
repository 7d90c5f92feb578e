// Copyright (c) lcadag contributors.
// SPDX-License-Identifier: Apache-2.0
#ifndef LCADAG_SIZE_INDEX_HPP
#define LCADAG_SIZE_INDEX_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "lcadag/types.hpp"

namespace lcadag {

// A set of subset sizes: the "which cardinalities matter" parameter of the
// lca classification. Sizes are kept sorted and deduplicated, every size is
// >= 1. When `requires_one()` is set the index additionally contains 1 and
// may be used where the 1-containing form is a precondition (the lca
// property, simplification).
class SizeIndex {
 public:
  // Plain size set. Throws std::invalid_argument on empty input or sizes < 1.
  static SizeIndex of(std::vector<int> sizes);
  // 1-containing size set: additionally requires 1 ∈ sizes.
  static SizeIndex with_one(std::vector<int> sizes);

  const std::vector<int>& sizes() const { return sizes_; }
  bool requires_one() const { return requires_one_; }
  bool contains(int k) const;
  // Largest useful size given a ground set of n elements, i.e. whether any
  // size in the index is <= n.
  bool feasible_for(std::size_t n) const;
  std::string to_string() const;  // "{1,2}"

  bool operator==(const SizeIndex& other) const {
    return sizes_ == other.sizes_ && requires_one_ == other.requires_one_;
  }

 private:
  SizeIndex() = default;
  std::vector<int> sizes_;
  bool requires_one_ = false;
};

// C(n, k) saturating at uint64 max.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

// Number of subsets of an n-element set whose size lies in the index
// (saturating). Sizes larger than n contribute nothing.
std::uint64_t subset_space_size(std::size_t n, const SizeIndex& index);

// Enumeration cap: LCADAG_ENUM_CAP environment variable, default 10^7.
std::uint64_t default_enumeration_cap();

// Visits every subset A ⊆ {0,…,n−1} with |A| in the index: sizes ascending,
// subsets of equal size in lexicographic order. The visitor returns false to
// stop early. Throws Error(ResourceLimit) up front when the full space is
// larger than `cap`.
void for_each_index_subset(std::size_t n, const SizeIndex& index, std::uint64_t cap,
                           const std::function<bool(const LabelSet&)>& visit);

}  // namespace lcadag

#endif
