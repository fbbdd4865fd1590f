#include "leafine/distinct.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <unordered_map>
#include <utility>

#include "leafine/errors.hpp"

namespace leafine {

namespace {

// Open-addressing set of CodeIds; iteration order is deterministic for a
// fixed insertion sequence, which keeps the whole pass reproducible.
class FlatIdSet {
 public:
  FlatIdSet() : table_(64, kEmpty), mask_(63) {}

  bool insert(CodeId id) {
    std::size_t pos = static_cast<std::size_t>(mix(id)) & mask_;
    while (true) {
      CodeId cur = table_[pos];
      if (cur == kEmpty) {
        table_[pos] = id;
        ++used_;
        if (used_ * 5 >= table_.size() * 3) grow();
        return true;
      }
      if (cur == id) return false;
      pos = (pos + 1) & mask_;
    }
  }

  std::vector<CodeId> take_sorted() const {
    std::vector<CodeId> out;
    out.reserve(used_);
    for (CodeId id : table_)
      if (id != kEmpty) out.push_back(id);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  static constexpr CodeId kEmpty = 0xFFFFFFFFu;

  static std::uint64_t mix(CodeId id) {
    std::uint64_t x = id + 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
  }

  void grow() {
    std::vector<CodeId> old = std::move(table_);
    table_.assign(old.size() * 2, kEmpty);
    mask_ = table_.size() - 1;
    for (CodeId id : old) {
      if (id == kEmpty) continue;
      std::size_t pos = static_cast<std::size_t>(mix(id)) & mask_;
      while (table_[pos] != kEmpty) pos = (pos + 1) & mask_;
      table_[pos] = id;
    }
  }

  std::vector<CodeId> table_;
  std::size_t mask_;
  std::size_t used_ = 0;
};

// Partial pick-multisets, stored as id-sorted runs in one flat arena so a
// level of the merge never pays per-state allocation.
class StateLevel {
 public:
  StateLevel() { offsets_.push_back(0); }

  std::size_t size() const { return offsets_.size() - 1; }

  std::span<const CodeId> slice(std::size_t i) const {
    return {data_.data() + offsets_[i],
            data_.data() + offsets_[i + 1]};
  }

  void add_empty() { offsets_.push_back(static_cast<std::uint32_t>(data_.size())); }

  void add(std::span<const CodeId> s) {
    data_.insert(data_.end(), s.begin(), s.end());
    offsets_.push_back(static_cast<std::uint32_t>(data_.size()));
  }

  // s with `extra` inserted at its id-sorted position.
  void add_with(std::span<const CodeId> s, CodeId extra) {
    std::size_t i = 0;
    for (; i < s.size() && s[i] < extra; ++i) data_.push_back(s[i]);
    data_.push_back(extra);
    for (; i < s.size(); ++i) data_.push_back(s[i]);
    offsets_.push_back(static_cast<std::uint32_t>(data_.size()));
  }

  void dedup() {
    std::vector<std::uint32_t> order(size());
    std::iota(order.begin(), order.end(), 0u);
    auto less = [&](std::uint32_t a, std::uint32_t b) {
      auto sa = slice(a), sb = slice(b);
      return std::lexicographical_compare(sa.begin(), sa.end(), sb.begin(),
                                          sb.end());
    };
    std::sort(order.begin(), order.end(), less);
    StateLevel out;
    out.data_.reserve(data_.size());
    out.offsets_.reserve(offsets_.size());
    for (std::size_t k = 0; k < order.size(); ++k) {
      if (k > 0) {
        auto prev = slice(order[k - 1]), cur = slice(order[k]);
        if (prev.size() == cur.size() &&
            std::equal(prev.begin(), prev.end(), cur.begin()))
          continue;
      }
      out.add(slice(order[k]));
    }
    swap(out);
  }

  void swap(StateLevel& other) {
    data_.swap(other.data_);
    offsets_.swap(other.offsets_);
  }

  void clear_to_empty_state() {
    data_.clear();
    offsets_.assign(2, 0);  // one state: the empty pick set
  }

 private:
  std::vector<CodeId> data_;
  std::vector<std::uint32_t> offsets_;
};

}  // namespace

DistinctSets distinct_sets(const TopTree& tree, std::size_t cap) {
  DistinctSets out;
  CodePool& pool = out.pool;
  const std::size_t base = pool.size();
  const std::uint64_t step_budget =
      std::max<std::uint64_t>(static_cast<std::uint64_t>(cap) * 4,
                              std::uint64_t{1} << 24);
  std::uint64_t steps = 0;

  auto bump = [&] {
    if (++steps > step_budget)
      throw DistinctSetOverflow("merge enumeration passed " +
                                std::to_string(step_budget) +
                                " candidate steps");
  };
  auto check_cap = [&] {
    if (pool.size() - base > cap)
      throw DistinctSetOverflow("more than " + std::to_string(cap) +
                                " distinct codes created");
  };

  const Node* root = &tree.root();
  std::unordered_map<const Node*, std::vector<CodeId>> memo;
  struct Frame {
    const Node* node;
    std::size_t next_child;
  };
  std::vector<Frame> stack;
  stack.push_back({root, 0});

  StateLevel states;
  StateLevel next;
  std::vector<CodeId> scratch;

  while (!stack.empty()) {
    Frame& f = stack.back();
    const Node* n = f.node;
    if (f.next_child == 0) {
      if (memo.count(n) != 0) {  // shared subtree already done
        stack.pop_back();
        continue;
      }
      if (n->is_leaf()) {
        memo.emplace(n, std::vector<CodeId>{CodePool::kLeaf});
        stack.pop_back();
        continue;
      }
    }
    if (f.next_child < n->children().size()) {
      const Node* c = n->children()[f.next_child].get();
      ++f.next_child;
      if (memo.count(c) == 0) stack.push_back({c, 0});
      continue;
    }

    const std::size_t d = n->children().size();
    std::vector<const std::vector<CodeId>*> rsets;
    rsets.reserve(d);
    for (const auto& c : n->children()) rsets.push_back(&memo.at(c.get()));

    FlatIdSet dedup;
    for (const auto* rs : rsets)
      for (CodeId id : *rs) dedup.insert(id);

    const bool at_root = (n == root);
    FlatIdSet root_dedup;
    auto record = [&](CodeId id) {
      check_cap();
      dedup.insert(id);
      if (at_root) root_dedup.insert(id);
    };

    // One pick or none per child; a state is the id-sorted multiset of
    // picks so far. Levels for all children but the last are materialized
    // and deduplicated, the last child streams straight into the pool, so
    // memory follows the deduplicated level sizes rather than the raw
    // product of the child set sizes.
    states.clear_to_empty_state();
    for (std::size_t k = 0; k + 1 < d; ++k) {
      next.clear_to_empty_state();
      // the fresh empty state stands in for "absent at every child <= k"
      for (std::size_t i = 0; i < states.size(); ++i) {
        auto s = states.slice(i);
        if (!s.empty()) {
          bump();
          next.add(s);
        }
        for (CodeId r : *rsets[k]) {
          bump();
          next.add_with(s, r);
        }
      }
      next.dedup();
      states.swap(next);
    }
    const std::vector<CodeId>& last = *rsets[d - 1];
    for (std::size_t i = 0; i < states.size(); ++i) {
      auto s = states.slice(i);
      if (s.size() >= 2) {
        bump();
        scratch.assign(s.begin(), s.end());
        record(pool.intern_unsorted(scratch));
      }
      if (s.empty()) continue;  // one pick total never survives the root
      for (CodeId r : last) {
        bump();
        scratch.assign(s.begin(), s.end());
        scratch.push_back(r);
        record(pool.intern_unsorted(scratch));
      }
    }
    memo.emplace(n, dedup.take_sorted());
    if (at_root) out.root_merge = root_dedup.take_sorted();
    stack.pop_back();
  }

  out.all = memo.at(root);
  return out;
}

std::set<std::string> distinct_codes(const TopTree& tree, std::size_t cap) {
  DistinctSets s = distinct_sets(tree, cap);
  std::set<std::string> out;
  for (CodeId id : s.all) out.insert(s.pool.text(id));
  return out;
}

BigCount count_distinct(const TopTree& tree, std::size_t cap) {
  return BigCount(static_cast<unsigned long>(distinct_sets(tree, cap).all.size()));
}

std::set<std::string> root_containing_codes(const TopTree& tree,
                                            std::size_t cap) {
  if (tree.leaf_count() < 2)
    throw SingleLeafTree("root-containing subtrees need >= 2 leaves");
  DistinctSets s = distinct_sets(tree, cap);
  std::set<std::string> out;
  for (CodeId id : s.root_merge) out.insert(s.pool.text(id));
  return out;
}

}  // namespace leafine
