#include "leafine/tree.hpp"

#include <algorithm>
#include <utility>

#include "leafine/errors.hpp"

namespace leafine {

NodePtr Node::leaf() { return NodePtr(new Node()); }

NodePtr Node::make(std::vector<NodePtr> children) {
  if (children.empty()) {
    return leaf();
  }
  if (children.size() == 1) {
    throw UnaryVertexError("internal vertex with exactly one child");
  }
  auto* n = new Node();
  n->children_ = std::move(children);
  n->leaf_count_ = 0;
  n->node_count_ = 1;
  n->height_ = 0;
  for (const NodePtr& c : n->children_) {
    n->leaf_count_ += c->leaf_count_;
    n->node_count_ += c->node_count_;
    n->height_ = std::max(n->height_, c->height_ + 1);
  }
  return NodePtr(n);
}

// Hand-rolled teardown: the implicit recursive destruction of children
// would overflow the call stack on deep chains (depth >= 1e5 inputs are
// in scope). Children still referenced elsewhere are left alone.
Node::~Node() {
  std::vector<NodePtr> pending(std::make_move_iterator(children_.begin()),
                               std::make_move_iterator(children_.end()));
  children_.clear();
  while (!pending.empty()) {
    NodePtr p = std::move(pending.back());
    pending.pop_back();
    if (p.use_count() == 1) {
      auto* m = const_cast<Node*>(p.get());
      pending.insert(pending.end(),
                     std::make_move_iterator(m->children_.begin()),
                     std::make_move_iterator(m->children_.end()));
      m->children_.clear();
    }
  }
}

TopTree TopTree::leaf() { return TopTree(Node::leaf()); }

TopTree TopTree::branch(std::vector<TopTree> subtrees) {
  std::vector<NodePtr> children;
  children.reserve(subtrees.size());
  for (TopTree& t : subtrees) {
    children.push_back(std::move(t.root_));
  }
  return TopTree(Node::make(std::move(children)));
}

TopTree TopTree::from_root(NodePtr root) {
  if (!root) {
    throw SyntaxError("empty tree");
  }
  return TopTree(std::move(root));
}

std::uint64_t leaf_count(const TopTree& t) { return t.leaf_count(); }
std::uint32_t height(const TopTree& t) { return t.height(); }

}  // namespace leafine
