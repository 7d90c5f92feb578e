// Copyright (c) lcadag contributors.
// SPDX-License-Identifier: Apache-2.0
#include "lcadag/size_index.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <stdexcept>

#include "lcadag/errors.hpp"

namespace lcadag {

SizeIndex SizeIndex::of(std::vector<int> sizes) {
  if (sizes.empty()) throw std::invalid_argument("size index must be nonempty");
  for (int s : sizes) {
    if (s < 1) throw std::invalid_argument("size index entries must be >= 1");
  }
  std::sort(sizes.begin(), sizes.end());
  sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
  SizeIndex out;
  out.sizes_ = std::move(sizes);
  return out;
}

SizeIndex SizeIndex::with_one(std::vector<int> sizes) {
  SizeIndex out = of(std::move(sizes));
  if (out.sizes_.front() != 1) {
    throw std::invalid_argument("this size index must contain 1");
  }
  out.requires_one_ = true;
  return out;
}

bool SizeIndex::contains(int k) const {
  return std::binary_search(sizes_.begin(), sizes_.end(), k);
}

bool SizeIndex::feasible_for(std::size_t n) const {
  return static_cast<std::size_t>(sizes_.front()) <= n;
}

std::string SizeIndex::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < sizes_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(sizes_[i]);
  }
  out += "}";
  return out;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  unsigned __int128 result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // After this step result == C(n-k+i, i), which only grows with i, so a
    // saturated prefix means a saturated final value.
    result = result * (n - k + i) / i;
    if (result > kMax) return kMax;
  }
  return static_cast<std::uint64_t>(result);
}

std::uint64_t subset_space_size(std::size_t n, const SizeIndex& index) {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = 0;
  for (int s : index.sizes()) {
    if (static_cast<std::size_t>(s) > n) continue;
    std::uint64_t c = binomial(n, static_cast<std::uint64_t>(s));
    if (total > kMax - c) return kMax;
    total += c;
  }
  return total;
}

std::uint64_t default_enumeration_cap() {
  if (const char* env = std::getenv("LCADAG_ENUM_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::uint64_t>(v);
  }
  return 10'000'000ull;
}

void for_each_index_subset(std::size_t n, const SizeIndex& index, std::uint64_t cap,
                           const std::function<bool(const LabelSet&)>& visit) {
  std::uint64_t space = subset_space_size(n, index);
  if (space > cap) {
    Error err(ErrorKind::ResourceLimit,
              "subset enumeration needs " + std::to_string(space) +
                  " sets but the cap is " + std::to_string(cap) +
                  " (raise LCADAG_ENUM_CAP to override)");
    throw err;
  }
  for (int size : index.sizes()) {
    auto k = static_cast<std::size_t>(size);
    if (k > n) continue;
    LabelSet a(k);
    for (std::size_t i = 0; i < k; ++i) a[i] = static_cast<LabelIndex>(i);
    while (true) {
      if (!visit(a)) return;
      // next k-combination of {0,…,n−1} in lexicographic order
      std::size_t i = k;
      while (i > 0 && a[i - 1] == static_cast<LabelIndex>(n - k + i - 1)) --i;
      if (i == 0) break;
      ++a[i - 1];
      for (std::size_t j = i; j < k; ++j) a[j] = a[j - 1] + 1;
    }
  }
}

}  // namespace lcadag
