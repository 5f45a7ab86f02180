#include "forestf/word.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <cstdlib>
#include <numeric>

#include "forestf/errors.hpp"

namespace forestf {

Word parse_word(std::string_view text) {
  Word w;
  if (text.empty() || text == "e") return w;
  std::size_t pos = 0;
  for (;;) {
    if (pos >= text.size() || text[pos] != 'x')
      throw ParseError("expected 'x'", pos);
    ++pos;
    std::size_t digits_start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == digits_start) throw ParseError("expected a generator index", pos);
    int index = std::atoi(std::string(text.substr(digits_start, pos - digits_start)).c_str());
    long long exponent = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      bool negative = false;
      if (pos < text.size() && text[pos] == '-') {
        negative = true;
        ++pos;
      }
      std::size_t exp_start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == exp_start) throw ParseError("expected an exponent", pos);
      exponent = std::atoll(std::string(text.substr(exp_start, pos - exp_start)).c_str());
      if (negative) exponent = -exponent;
    }
    int sign = exponent < 0 ? -1 : 1;
    for (long long i = 0; i < std::llabs(exponent); ++i) w.push_back({index, sign});
    if (pos == text.size()) break;
    if (text[pos] != ' ') throw ParseError("expected a single space between letters", pos);
    ++pos;
  }
  return w;
}

std::vector<Word> parse_word_lines(std::string_view text) {
  std::vector<Word> words;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.front() != '#') words.push_back(parse_word(line));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return words;
}

std::string format_word(const Word& w) {
  if (w.empty()) return "e";
  std::string out;
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    std::size_t run = j - i;
    if (!out.empty()) out += ' ';
    out += "x" + std::to_string(w[i].index);
    if (w[i].sign < 0) {
      out += "^-" + std::to_string(run);
    } else if (run > 1) {
      out += "^" + std::to_string(run);
    }
    i = j;
  }
  return out;
}

Word expand_general_letter(const Letter& l) {
  if (l.index < 0) throw PreconditionError("negative generator index");
  if (l.index <= 1) return {l};
  Word w;
  int shift = l.index - 1;
  for (int i = 0; i < shift; ++i) w.push_back({0, -1});
  w.push_back({1, l.sign});
  for (int i = 0; i < shift; ++i) w.push_back({0, 1});
  return w;
}

Word free_reduce(Word w) {
  Word out;
  for (const Letter& l : w) {
    if (!out.empty() && out.back().index == l.index && out.back().sign == -l.sign)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

Word expand_to_x0x1(const Word& w) {
  Word out;
  for (const Letter& l : w) {
    Word part = expand_general_letter(l);
    out.insert(out.end(), part.begin(), part.end());
  }
  return free_reduce(std::move(out));
}

bool is_strongly_positive_word(const Word& w) {
  for (const Letter& l : w)
    if (l.sign != 1 || l.index < 1) return false;
  return true;
}

int x0x1_length_of_general_word(const Word& w) {
  if (!is_strongly_positive_word(w))
    throw PreconditionError("word is not strongly positive");
  if (w.empty()) return 0;
  int length = std::abs(1 - w.front().index);
  for (std::size_t k = 0; k + 1 < w.size(); ++k)
    length += std::abs(w[k].index - w[k + 1].index);
  length += std::abs(w.back().index - 1);
  return length + static_cast<int>(w.size());
}

ForestDiagram evaluate(const Word& w) {
  ForestDiagram acc = identity();
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    acc = apply_xn(it->index, it->sign, acc);
  return acc;
}

ForestDiagram evaluate(std::string_view text) { return evaluate(parse_word(text)); }

namespace {

// Pre-order caret emission: a caret whose leftmost leaf sits at column j
// contributes the letter x_{j+1}; the trees of the forest are walked left to
// right. Prefixed by x0^pointer.
void emit_tree(const Tree& t, int col, Word& out) {
  if (t.is_leaf()) return;
  out.push_back({col + 1, 1});
  emit_tree(t.left(), col, out);
  emit_tree(t.right(), col + t.left().leaf_count(), out);
}

Word emit_positive(const Forest& f) {
  Word out;
  for (int i = 0; i < f.pointer; ++i) out.push_back({0, 1});
  int col = 0;
  for (const Tree& t : f.trees) {
    emit_tree(t, col, out);
    col += t.leaf_count();
  }
  return out;
}

}  // namespace

Word normal_form(const ForestDiagram& f0) {
  ForestDiagram f = reduce(f0);
  Word pos = emit_positive(f.top);
  Word neg = emit_positive(f.bottom);
  for (auto it = neg.rbegin(); it != neg.rend(); ++it) pos.push_back({it->index, -1});
  return pos;
}

Word anti_normal_form(const ForestDiagram& f) {
  if (!is_strongly_positive(f))
    throw PreconditionError("anti-normal form requires a strongly positive element");

  // Flatten the top forest into nodes with parent links, then repeatedly
  // join the leftmost adjacent sibling pair: that is exactly "create the
  // leftmost caret whose children are complete".
  struct NodeRec {
    int parent = -1;
    bool is_left = false;
  };
  std::vector<NodeRec> nodes;
  std::vector<int> current;  // roots of the built-so-far forest, leaves first

  struct Builder {
    std::vector<NodeRec>& nodes;
    std::vector<int>& leaves;
    int add(const Tree& t, int parent, bool is_left) {
      int id = static_cast<int>(nodes.size());
      nodes.push_back({parent, is_left});
      if (t.is_leaf()) {
        leaves.push_back(id);
      } else {
        add(t.left(), id, true);
        add(t.right(), id, false);
      }
      return id;
    }
  };
  Builder builder{nodes, current};
  int roots = 0;
  for (const Tree& t : f.top.trees) {
    builder.add(t, -1, false);
    ++roots;
  }

  Word construction;  // letters in the order the carets are created
  for (;;) {
    int found = -1;
    for (std::size_t i = 0; i + 1 < current.size(); ++i) {
      const NodeRec& a = nodes[current[i]];
      const NodeRec& b = nodes[current[i + 1]];
      if (a.parent >= 0 && a.parent == b.parent && a.is_left) {
        found = static_cast<int>(i);
        break;
      }
    }
    if (found < 0) break;
    construction.push_back({found + 1, 1});
    current[found] = nodes[current[found]].parent;
    current.erase(current.begin() + found + 1);
  }
  assert(static_cast<int>(current.size()) == roots && "construction incomplete");

  std::reverse(construction.begin(), construction.end());
  return construction;
}

RewriteResult rewrite_to_anti_normal(Word w) {
  if (!is_strongly_positive_word(w))
    throw PreconditionError("rewriting requires a strongly positive word");
  long long steps = 0;
  for (;;) {
    std::size_t redex = w.size();
    for (std::size_t j = 0; j + 1 < w.size(); ++j) {
      if (w[j].index < w[j + 1].index - 1) {
        redex = j;
        break;
      }
    }
    if (redex == w.size()) break;
    int a = w[redex].index;
    int b = w[redex + 1].index;
    w[redex] = {b - 1, 1};
    w[redex + 1] = {a, 1};
    ++steps;
  }
  return {std::move(w), steps};
}

}  // namespace forestf
