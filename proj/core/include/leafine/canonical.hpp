#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "leafine/tree.hpp"

namespace leafine {

// Canonical code grammar:  code := "L" | "(" code ("," code)+ ")"
// Children inside "(...)" appear in the pool's fixed total order: shorter
// code first, ties broken by lexicographic byte order. Two trees are
// isomorphic as rooted trees exactly when their codes are equal.

using CodeId = std::uint32_t;

// Interning store for canonical codes. Each distinct code is stored once
// as a sorted child-id tuple; id 0 is always the leaf code "L". Millions
// of codes stay compact: one record plus its child ids per code.
class CodePool {
 public:
  static constexpr CodeId kLeaf = 0;

  CodePool();
  CodePool(CodePool&&) noexcept = default;
  CodePool& operator=(CodePool&&) noexcept = default;
  CodePool(const CodePool&) = delete;
  CodePool& operator=(const CodePool&) = delete;

  // Children must already be in code order (see compare); count >= 2.
  CodeId intern_sorted(std::span<const CodeId> children);

  // Sorts the ids in place into code order, then interns.
  CodeId intern_unsorted(std::span<CodeId> children);

  CodeId intern(std::vector<CodeId> children) {
    return intern_unsorted({children.data(), children.size()});
  }

  // The fixed total order on codes: by length, then byte order. Returns
  // negative / zero / positive like strcmp. O(1) for unequal lengths.
  int compare(CodeId a, CodeId b) const;

  std::size_t size() const noexcept { return recs_.size(); }
  std::uint64_t length(CodeId id) const { return recs_[id].length; }
  std::uint64_t leaf_count(CodeId id) const { return recs_[id].leaf_count; }
  std::span<const CodeId> children(CodeId id) const;

  std::string text(CodeId id) const;
  void append_text(CodeId id, std::string& out) const;
  void write_text(CodeId id, std::ostream& out) const;

 private:
  struct Rec {
    std::uint64_t leaf_count;
    std::uint64_t length;
    std::uint32_t child_begin;
    std::uint32_t child_count;
  };

  CodeId lookup_or_insert(std::span<const CodeId> children,
                          std::uint64_t hash);
  void grow_table();

  std::vector<Rec> recs_;
  std::vector<CodeId> arena_;
  std::vector<CodeId> table_;  // open addressing, kEmptySlot sentinel
  std::size_t table_mask_ = 0;
  std::size_t table_used_ = 0;
};

// Interns the whole tree bottom-up; shared subtrees are visited once.
CodeId intern_tree(const TopTree& tree, CodePool& pool);

std::string canonical_code(const TopTree& tree);
bool is_isomorphic(const TopTree& a, const TopTree& b);

}  // namespace leafine
