#include "leafine/induce.hpp"

#include <algorithm>
#include <unordered_set>
#include <utility>

#include "leafine/canonical.hpp"
#include "leafine/errors.hpp"

namespace leafine {

namespace {

// Post-order walk of the unfolded tree as a flat list of child counts
// (0 = leaf). Leaves appear in depth-first index order.
std::vector<std::uint32_t> flatten_postorder(const Node* root) {
  std::vector<std::uint32_t> out;
  out.reserve(static_cast<std::size_t>(root->node_count()));
  struct Frame {
    const Node* node;
    std::size_t next_child;
  };
  std::vector<Frame> stack{{root, 0}};
  while (!stack.empty()) {
    Frame& f = stack.back();
    const Node* n = f.node;
    if (n->is_leaf()) {
      out.push_back(0);
      stack.pop_back();
      continue;
    }
    if (f.next_child < n->children().size()) {
      const Node* c = n->children()[f.next_child].get();
      ++f.next_child;
      stack.push_back({c, 0});
      continue;
    }
    out.push_back(static_cast<std::uint32_t>(n->children().size()));
    stack.pop_back();
  }
  return out;
}

}  // namespace

LeafSelection::LeafSelection(std::vector<std::uint64_t> indices)
    : indices_(std::move(indices)) {
  std::sort(indices_.begin(), indices_.end());
  indices_.erase(std::unique(indices_.begin(), indices_.end()),
                 indices_.end());
}

TopTree induce(const TopTree& tree, const LeafSelection& sel) {
  if (sel.empty()) {
    throw EmptySelection("selection holds no leaves");
  }
  const std::uint64_t leaves = tree.leaf_count();
  if (sel.indices().back() >= leaves) {
    throw IndexOutOfRange("leaf index " +
                          std::to_string(sel.indices().back()) +
                          " out of range for a tree with " +
                          std::to_string(leaves) + " leaves");
  }

  // Bottom-up over the unfolded tree: a leaf survives iff selected, an
  // internal vertex keeps its surviving children and vanishes when one or
  // zero remain (outdegree-1 suppression happens right here, so no unary
  // vertex is ever materialized).
  const std::vector<std::uint32_t> flat = flatten_postorder(&tree.root());
  auto next_sel = sel.indices().begin();
  std::uint64_t ordinal = 0;
  std::vector<NodePtr> vstack;
  std::vector<NodePtr> survivors;
  for (std::uint32_t arity : flat) {
    if (arity == 0) {
      bool selected =
          next_sel != sel.indices().end() && *next_sel == ordinal;
      if (selected) ++next_sel;
      ++ordinal;
      vstack.push_back(selected ? Node::leaf() : nullptr);
      continue;
    }
    survivors.clear();
    for (std::size_t k = vstack.size() - arity; k < vstack.size(); ++k) {
      if (vstack[k]) survivors.push_back(std::move(vstack[k]));
    }
    vstack.resize(vstack.size() - arity);
    if (survivors.empty()) {
      vstack.push_back(nullptr);
    } else if (survivors.size() == 1) {
      vstack.push_back(std::move(survivors.front()));
    } else {
      vstack.push_back(Node::make(std::move(survivors)));
      survivors = {};
    }
  }
  return TopTree::from_root(std::move(vstack.front()));
}

EnumerationResult enumerate_bruteforce(const TopTree& tree,
                                       std::uint64_t limit) {
  const std::uint64_t leaves = tree.leaf_count();
  if (leaves > 63) {
    throw BudgetExceeded("tree has " + std::to_string(leaves) +
                         " leaves; exhaustive subset iteration is capped "
                         "at 63");
  }
  const std::uint64_t subsets = (std::uint64_t{1} << leaves) - 1;
  if (subsets > limit) {
    throw BudgetExceeded(std::to_string(subsets) +
                         " leaf subsets exceed the budget of " +
                         std::to_string(limit));
  }

  const std::vector<std::uint32_t> flat = flatten_postorder(&tree.root());
  CodePool pool;
  std::unordered_set<CodeId> roots;

  // One pass of the reduction machine per subset mask: absent leaves
  // collapse exactly like suppressed vertices, and the surviving ids are
  // interned on the spot, so no intermediate tree is ever built.
  constexpr CodeId kAbsent = 0xFFFFFFFFu;
  std::vector<CodeId> vstack;
  std::vector<CodeId> picks;
  EnumerationResult result;
  for (std::uint64_t mask = 1; mask <= subsets; ++mask) {
    vstack.clear();
    std::uint32_t ordinal = 0;
    for (std::uint32_t arity : flat) {
      if (arity == 0) {
        vstack.push_back((mask >> ordinal & 1) ? CodePool::kLeaf : kAbsent);
        ++ordinal;
        continue;
      }
      picks.clear();
      for (std::size_t k = vstack.size() - arity; k < vstack.size(); ++k) {
        if (vstack[k] != kAbsent) picks.push_back(vstack[k]);
      }
      vstack.resize(vstack.size() - arity);
      if (picks.empty()) {
        vstack.push_back(kAbsent);
      } else if (picks.size() == 1) {
        vstack.push_back(picks.front());
      } else {
        vstack.push_back(pool.intern_unsorted(picks));
      }
    }
    roots.insert(vstack.front());
    ++result.subsets_visited;
  }

  for (CodeId id : roots) {
    result.codes.insert(pool.text(id));
  }
  return result;
}

BigCount count_labeled(const TopTree& tree) {
  return pow2_minus_1(tree.leaf_count());
}

}  // namespace leafine
