#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "leafine/tree.hpp"

namespace leafine {

// Tree dialect:  tree := "L" | "(" tree ("," tree)+ ")"
// An optional trailing ";" is accepted. The parser skips ASCII whitespace
// between tokens; emitted text never contains whitespace.

// Throws SyntaxError / UnaryVertexError.
TopTree parse(std::string_view text);

// canonical = false reproduces the stored child order; canonical = true
// emits the tree's canonical code.
std::string serialize(const TopTree& tree, bool canonical = false);
void serialize(const TopTree& tree, std::ostream& out, bool canonical = false);

struct ParsedLine {
  std::uint64_t line_number;  // 1-based position in the input
  TopTree tree;
};

// One tree per line; blank lines and "#"-prefixed comment lines are
// ignored. Syntax errors are reported with their line number.
std::vector<ParsedLine> parse_lines(std::istream& in);

}  // namespace leafine
