#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "leafine/bigcount.hpp"
#include "leafine/tree.hpp"

namespace leafine {

// Default cap on exhaustive subset iteration (number of subsets).
inline constexpr std::uint64_t kDefaultBruteBudget = std::uint64_t{1} << 24;

// A subset of a tree's leaves. Leaves are indexed 0..leaf_count-1 in
// depth-first order, left to right over the stored child order.
class LeafSelection {
 public:
  LeafSelection() = default;
  explicit LeafSelection(std::vector<std::uint64_t> indices);

  const std::vector<std::uint64_t>& indices() const noexcept {
    return indices_;
  }
  bool empty() const noexcept { return indices_.empty(); }
  std::size_t size() const noexcept { return indices_.size(); }

 private:
  std::vector<std::uint64_t> indices_;  // sorted, duplicates removed
};

// The leaf-induced subtree: minimal subtree spanning the selected leaves,
// re-rooted at its vertex closest to the original root, with every
// outdegree-1 vertex suppressed. Throws EmptySelection / IndexOutOfRange.
TopTree induce(const TopTree& tree, const LeafSelection& sel);

struct EnumerationResult {
  std::set<std::string> codes;       // canonical codes, one per class
  std::uint64_t subsets_visited = 0; // always 2^leaves - 1 on success
};

// Ground-truth oracle: iterates every nonempty leaf subset, induces,
// canonicalizes, deduplicates. Throws BudgetExceeded when the tree has
// more subsets than `limit`.
EnumerationResult enumerate_bruteforce(
    const TopTree& tree, std::uint64_t limit = kDefaultBruteBudget);

// 2^leaf_count - 1: the number of leaf selections (isomorphism ignored).
BigCount count_labeled(const TopTree& tree);

}  // namespace leafine
