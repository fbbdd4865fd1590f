#include "leafine/canonical.hpp"

#include <algorithm>
#include <cassert>
#include <ostream>
#include <unordered_map>
#include <utility>

namespace leafine {

namespace {

constexpr CodeId kEmptySlot = 0xFFFFFFFFu;

inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

std::uint64_t hash_children(std::span<const CodeId> children) {
  std::uint64_t h = 0x243F6A8885A308D3ull ^ children.size();
  for (CodeId id : children) h = mix64(h ^ id);
  return h;
}

}  // namespace

CodePool::CodePool() {
  recs_.push_back(Rec{1, 1, 0, 0});  // id 0: the leaf code "L"
  table_.assign(64, kEmptySlot);
  table_mask_ = table_.size() - 1;
}

std::span<const CodeId> CodePool::children(CodeId id) const {
  const Rec& r = recs_[id];
  return {arena_.data() + r.child_begin, r.child_count};
}

void CodePool::grow_table() {
  std::vector<CodeId> fresh(table_.size() * 2, kEmptySlot);
  std::size_t mask = fresh.size() - 1;
  for (CodeId id : table_) {
    if (id == kEmptySlot) continue;
    std::size_t pos = hash_children(children(id)) & mask;
    while (fresh[pos] != kEmptySlot) pos = (pos + 1) & mask;
    fresh[pos] = id;
  }
  table_ = std::move(fresh);
  table_mask_ = mask;
}

CodeId CodePool::intern_sorted(std::span<const CodeId> ch) {
  assert(ch.size() >= 2);
  std::size_t pos = hash_children(ch) & table_mask_;
  while (true) {
    CodeId cand = table_[pos];
    if (cand == kEmptySlot) break;
    const Rec& r = recs_[cand];
    if (r.child_count == ch.size() &&
        std::equal(ch.begin(), ch.end(), arena_.begin() + r.child_begin)) {
      return cand;
    }
    pos = (pos + 1) & table_mask_;
  }

  Rec r;
  r.child_begin = static_cast<std::uint32_t>(arena_.size());
  r.child_count = static_cast<std::uint32_t>(ch.size());
  r.leaf_count = 0;
  r.length = 1 + ch.size();  // "(" + ")" + (k-1) commas
  for (CodeId c : ch) {
    r.leaf_count += recs_[c].leaf_count;
    r.length += recs_[c].length;
  }
  arena_.insert(arena_.end(), ch.begin(), ch.end());
  CodeId id = static_cast<CodeId>(recs_.size());
  recs_.push_back(r);
  table_[pos] = id;
  ++table_used_;
  if (table_used_ * 5 >= table_.size() * 3) grow_table();
  return id;
}

CodeId CodePool::intern_unsorted(std::span<CodeId> ch) {
  auto less = [this](CodeId a, CodeId b) { return compare(a, b) < 0; };
  if (ch.size() <= 8) {
    for (std::size_t i = 1; i < ch.size(); ++i) {
      CodeId v = ch[i];
      std::size_t j = i;
      for (; j > 0 && less(v, ch[j - 1]); --j) ch[j] = ch[j - 1];
      ch[j] = v;
    }
  } else {
    std::sort(ch.begin(), ch.end(), less);
  }
  return intern_sorted(ch);
}

int CodePool::compare(CodeId a, CodeId b) const {
  if (a == b) return 0;
  const std::uint64_t la = recs_[a].length, lb = recs_[b].length;
  if (la != lb) return la < lb ? -1 : 1;

  // Equal lengths: walk both texts in lockstep. Tokens below 256 are
  // literal characters; anything else is a code id shifted by 256.
  thread_local std::vector<std::uint64_t> sa, sb;
  sa.clear();
  sb.clear();
  sa.push_back(std::uint64_t{a} + 256);
  sb.push_back(std::uint64_t{b} + 256);
  auto step = [this](std::vector<std::uint64_t>& st) -> char {
    std::uint64_t t = st.back();
    st.pop_back();
    if (t < 256) return static_cast<char>(t);
    CodeId id = static_cast<CodeId>(t - 256);
    if (id == kLeaf) return 'L';
    const Rec& r = recs_[id];
    st.push_back(')');
    for (std::uint32_t k = r.child_count; k-- > 0;) {
      st.push_back(std::uint64_t{arena_[r.child_begin + k]} + 256);
      if (k > 0) st.push_back(',');
    }
    return '(';
  };
  while (!sa.empty() && !sb.empty()) {
    char ca = step(sa);
    char cb = step(sb);
    if (ca != cb) return ca < cb ? -1 : 1;
  }
  return 0;
}

namespace {

template <typename Emit>
void walk_text(const CodePool& pool, CodeId id, Emit&& emit) {
  std::vector<std::uint64_t> st{std::uint64_t{id} + 256};
  while (!st.empty()) {
    std::uint64_t t = st.back();
    st.pop_back();
    if (t < 256) {
      emit(static_cast<char>(t));
      continue;
    }
    CodeId cur = static_cast<CodeId>(t - 256);
    if (cur == CodePool::kLeaf) {
      emit('L');
      continue;
    }
    auto ch = pool.children(cur);
    st.push_back(')');
    for (std::size_t k = ch.size(); k-- > 0;) {
      st.push_back(std::uint64_t{ch[k]} + 256);
      if (k > 0) st.push_back(',');
    }
    emit('(');
  }
}

}  // namespace

void CodePool::append_text(CodeId id, std::string& out) const {
  out.reserve(out.size() + static_cast<std::size_t>(recs_[id].length));
  walk_text(*this, id, [&out](char c) { out.push_back(c); });
}

std::string CodePool::text(CodeId id) const {
  std::string out;
  append_text(id, out);
  return out;
}

void CodePool::write_text(CodeId id, std::ostream& out) const {
  walk_text(*this, id, [&out](char c) { out.put(c); });
}

CodeId intern_tree(const TopTree& tree, CodePool& pool) {
  std::unordered_map<const Node*, CodeId> memo;
  struct Frame {
    const Node* node;
    std::size_t next_child;
  };
  std::vector<Frame> stack{{tree.root_ptr().get(), 0}};
  while (!stack.empty()) {
    Frame& f = stack.back();
    const Node* n = f.node;
    if (n->is_leaf()) {
      memo.emplace(n, CodePool::kLeaf);
      stack.pop_back();
      continue;
    }
    if (f.next_child == 0 && memo.count(n)) {  // shared node already done
      stack.pop_back();
      continue;
    }
    if (f.next_child < n->children().size()) {
      const Node* c = n->children()[f.next_child].get();
      ++f.next_child;
      if (!memo.count(c)) stack.push_back({c, 0});
      continue;
    }
    std::vector<CodeId> ids;
    ids.reserve(n->children().size());
    for (const NodePtr& c : n->children()) ids.push_back(memo.at(c.get()));
    memo.emplace(n, pool.intern(std::move(ids)));
    stack.pop_back();
  }
  return memo.at(tree.root_ptr().get());
}

std::string canonical_code(const TopTree& tree) {
  CodePool pool;
  return pool.text(intern_tree(tree, pool));
}

bool is_isomorphic(const TopTree& a, const TopTree& b) {
  CodePool pool;
  return intern_tree(a, pool) == intern_tree(b, pool);
}

}  // namespace leafine
