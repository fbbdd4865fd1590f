#include "leafine/dialect.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <utility>

#include "leafine/canonical.hpp"
#include "leafine/errors.hpp"

namespace leafine {

namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' ||
         c == '\v';
}

[[noreturn]] void fail(std::size_t pos, const std::string& what) {
  throw SyntaxError("at offset " + std::to_string(pos) + ": " + what);
}

}  // namespace

TopTree parse(std::string_view text) {
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && is_space(text[i])) ++i;
  };

  // One open frame per unclosed "("; the parsed tree for "L" or a closed
  // group is appended to the innermost frame.
  std::vector<std::vector<NodePtr>> frames;
  NodePtr done;  // set once a complete tree has been read at depth 0

  skip_ws();
  while (true) {
    if (i >= text.size()) fail(i, "unexpected end of input");
    char c = text[i];
    NodePtr finished;
    if (c == 'L') {
      ++i;
      finished = Node::leaf();
    } else if (c == '(') {
      ++i;
      frames.emplace_back();
      skip_ws();
      continue;
    } else {
      fail(i, std::string("expected 'L' or '(', got '") + c + "'");
    }

    // Attach the finished subtree, then absorb any ")" closers.
    while (true) {
      skip_ws();
      if (frames.empty()) {
        done = std::move(finished);
        break;
      }
      frames.back().push_back(std::move(finished));
      if (i >= text.size()) fail(i, "unclosed '('");
      char d = text[i];
      if (d == ',') {
        ++i;
        skip_ws();
        break;  // next sibling
      }
      if (d == ')') {
        ++i;
        if (frames.back().size() == 1) {
          throw UnaryVertexError("group with a single member at offset " +
                                 std::to_string(i - 1));
        }
        finished = Node::make(std::move(frames.back()));
        frames.pop_back();
        continue;  // may close the enclosing frame too
      }
      fail(i, std::string("expected ',' or ')', got '") + d + "'");
    }
    if (done) break;
  }

  skip_ws();
  if (i < text.size() && text[i] == ';') {
    ++i;
    skip_ws();
  }
  if (i < text.size()) fail(i, "trailing characters after tree");
  return TopTree::from_root(std::move(done));
}

void serialize(const TopTree& tree, std::ostream& out, bool canonical) {
  if (canonical) {
    CodePool pool;
    pool.write_text(intern_tree(tree, pool), out);
    return;
  }
  // Token stack over the shared structure; emits each occurrence.
  struct Tok {
    const Node* node;  // nullptr => emit ch
    char ch;
  };
  std::vector<Tok> stack{{tree.root_ptr().get(), 0}};
  while (!stack.empty()) {
    Tok t = stack.back();
    stack.pop_back();
    if (t.node == nullptr) {
      out.put(t.ch);
      continue;
    }
    if (t.node->is_leaf()) {
      out.put('L');
      continue;
    }
    const auto& ch = t.node->children();
    stack.push_back({nullptr, ')'});
    for (std::size_t k = ch.size(); k-- > 0;) {
      stack.push_back({ch[k].get(), 0});
      if (k > 0) stack.push_back({nullptr, ','});
    }
    out.put('(');
  }
}

std::string serialize(const TopTree& tree, bool canonical) {
  std::ostringstream out;
  serialize(tree, out, canonical);
  return out.str();
}

std::vector<ParsedLine> parse_lines(std::istream& in) {
  std::vector<ParsedLine> result;
  std::string line;
  std::uint64_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::size_t first = 0;
    while (first < line.size() && is_space(line[first])) ++first;
    if (first == line.size() || line[first] == '#') continue;
    try {
      result.push_back({number, parse(line)});
    } catch (const UnaryVertexError& e) {
      throw UnaryVertexError("line " + std::to_string(number) + ": " +
                             e.what());
    } catch (const Error& e) {
      throw SyntaxError("line " + std::to_string(number) + ": " + e.what());
    }
  }
  return result;
}

}  // namespace leafine
