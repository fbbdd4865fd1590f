#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace leafine {

class Node;
using NodePtr = std::shared_ptr<const Node>;

// Immutable vertex of a topological rooted tree. Nodes are shared freely:
// generated tree families reference common subtrees, so structural sizes
// (leaf_count, node_count) describe the unfolded tree, not distinct nodes.
class Node {
 public:
  // Leaf constructor-equivalent; use make() for internal vertices.
  static NodePtr leaf();

  // Internal vertex over >= 2 children; throws UnaryVertexError on exactly
  // one child and SyntaxError on zero children.
  static NodePtr make(std::vector<NodePtr> children);

  ~Node();
  Node(const Node&) = delete;
  Node& operator=(const Node&) = delete;

  const std::vector<NodePtr>& children() const noexcept { return children_; }
  bool is_leaf() const noexcept { return children_.empty(); }
  std::uint64_t leaf_count() const noexcept { return leaf_count_; }
  std::uint64_t node_count() const noexcept { return node_count_; }
  std::uint32_t height() const noexcept { return height_; }

 private:
  Node() = default;

  std::vector<NodePtr> children_;
  std::uint64_t leaf_count_ = 1;
  std::uint64_t node_count_ = 1;
  std::uint32_t height_ = 0;
};

// Value handle for a whole tree (never empty). Child order is stored but
// carries no semantic meaning; all observable behavior other than plain
// serialization is invariant under child permutation.
class TopTree {
 public:
  static TopTree leaf();
  static TopTree branch(std::vector<TopTree> subtrees);
  static TopTree from_root(NodePtr root);

  const Node& root() const noexcept { return *root_; }
  const NodePtr& root_ptr() const noexcept { return root_; }

  std::uint64_t leaf_count() const noexcept { return root_->leaf_count(); }
  std::uint64_t node_count() const noexcept { return root_->node_count(); }
  std::uint32_t height() const noexcept { return root_->height(); }

 private:
  explicit TopTree(NodePtr root) : root_(std::move(root)) {}
  NodePtr root_;
};

std::uint64_t leaf_count(const TopTree& t);
std::uint32_t height(const TopTree& t);

}  // namespace leafine
