#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "forestf/diagram.hpp"

namespace forestf {

// One generator letter x_index^sign with index >= 0 and sign in {+1, -1}.
struct Letter {
  int index;
  int sign;
};

inline bool operator==(const Letter& a, const Letter& b) {
  return a.index == b.index && a.sign == b.sign;
}

// Letters stored fully expanded (no exponent runs); the leftmost letter acts
// last under evaluation.
using Word = std::vector<Letter>;

// Grammar: letter := "x" digits ["^" ["-"] digits], single spaces between
// letters. "e" or the empty string denotes the empty word.
Word parse_word(std::string_view text);

// Fixture format: one word per line; blank lines and "#" comment lines are
// skipped.
std::vector<Word> parse_word_lines(std::string_view text);

// Run-length form with exponent syntax; the empty word prints as "e".
std::string format_word(const Word& w);

// x_n -> x0^(1-n) x1 x0^(n-1) for n >= 1; x_n^-1 is the formal inverse;
// x0 and x1 letters pass through.
Word expand_general_letter(const Letter& l);

// Per-letter expansion followed by free cancellation of adjacent inverse
// pairs.
Word expand_to_x0x1(const Word& w);

Word free_reduce(Word w);

// All letters positive with index >= 1 (strongly positive shape).
bool is_strongly_positive_word(const Word& w);

// |1 - i_n| + sum |i_{k+1} - i_k| + |i_1 - 1| + n for w = x_{i_n} ... x_{i_1}.
// Rejects words outside the strongly positive shape.
int x0x1_length_of_general_word(const Word& w);

// Reduced diagram of the element, folding the generator actions from the
// rightmost letter.
ForestDiagram evaluate(const Word& w);
ForestDiagram evaluate(std::string_view text);

// The unique x0^a0 ... xn^an xn^-bn ... x0^-b0 word for f.
Word normal_form(const ForestDiagram& f);

// The unique strongly positive word x_{i_n} ... x_{i_1} with
// i_{k+1} >= i_k - 1, built by always creating the leftmost caret whose
// children are complete. Pre: is_strongly_positive(f).
Word anti_normal_form(const ForestDiagram& f);

struct RewriteResult {
  Word word;
  long long steps;
};

// Repeatedly rewrites the leftmost adjacent pair x_a x_b with a < b - 1 to
// x_{b-1} x_a. The fixed point is the anti-normal form; the step count is at
// most C(|w|, 2).
RewriteResult rewrite_to_anti_normal(Word w);

}  // namespace forestf
