#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "leafine/bigcount.hpp"
#include "leafine/canonical.hpp"
#include "leafine/tree.hpp"

namespace leafine {

// Default cap on interned codes created during one distinct-set
// computation (counts every intermediate, not just the final set).
inline constexpr std::size_t kDefaultDistinctCap = 10'000'000;

// Bottom-up result for one tree, kept in interned form. `all` holds the
// full distinct set; `root_merge` holds the codes whose selections span
// at least two root branches (empty for a single-leaf tree).
struct DistinctSets {
  CodePool pool;
  std::vector<CodeId> all;
  std::vector<CodeId> root_merge;
};

// Computes both sets in one pass over the tree. For a vertex v the
// distinct set is the union of the children's sets plus every merge of
// one pick per child over a child subset of size >= 2. Throws
// DistinctSetOverflow when more than `cap` codes get created.
DistinctSets distinct_sets(const TopTree& tree, std::size_t cap = kDefaultDistinctCap);

// The set of canonical codes of all leaf-induced subtrees; equals the
// brute-force enumeration on every input.
std::set<std::string> distinct_codes(const TopTree& tree,
                                     std::size_t cap = kDefaultDistinctCap);

BigCount count_distinct(const TopTree& tree,
                        std::size_t cap = kDefaultDistinctCap);

// Codes of induced subtrees that keep the original root (the selected
// leaves span >= 2 root branches). Throws SingleLeafTree on a one-leaf
// tree, DistinctSetOverflow past the cap.
std::set<std::string> root_containing_codes(
    const TopTree& tree, std::size_t cap = kDefaultDistinctCap);

}  // namespace leafine
