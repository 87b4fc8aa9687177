#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "betathermo/digits.hpp"
#include "betathermo/numeric.hpp"
#include "betathermo/word.hpp"

namespace betathermo {

// Deterministic automaton for the set of words whose every suffix is
// lexicographically dominated by the expansion digit sequence. State j means
// "the run so far ends in the j-letter prefix of the digit sequence"; reading
// the next expansion digit advances along that spine, reading anything
// smaller drops back to the root, and reading anything larger rejects.
//
// With a periodicity certificate (p, q) the spine wraps: state p+q is
// identified with state p and the automaton is complete (any word length can
// be processed). Without one the spine ends in a frontier state at the stored
// depth; stepping out of the frontier throws DepthExceeded.
class PrefixAutomaton {
 public:
  // Tracks both the folded state and the exact length of the matched suffix.
  // suffix_len is the number of steps since the last drop to the root, which
  // equals the length of the longest suffix of the word that is a prefix of
  // the digit sequence. The folded state alone loses this (states p and p+q
  // coincide), and downstream cylinder logic needs the true length.
  struct Cursor {
    int state = 0;
    long suffix_len = 0;
  };

  static PrefixAutomaton build(const DigitSeq& d, int depth = -1);

  int alphabet() const { return alphabet_; }
  int states() const { return static_cast<int>(spine_digit_.size()) + (complete_ ? 0 : 1); }
  bool complete() const { return complete_; }
  int spine_digit(int state) const { return spine_digit_[state]; }

  // Next state, or -1 to reject. Throws DepthExceeded when stepping out of
  // the frontier state of an incomplete automaton.
  int step(int state, int letter) const;

  // Advances the cursor in place; returns false (cursor unchanged) on reject.
  bool step(Cursor& cur, int letter) const;

  // Runs the word from the root; nullopt when some prefix is rejected.
  std::optional<Cursor> run(const Word& w) const;

  bool is_member(const Word& w) const { return run(w).has_value(); }

  // Number of accepted words of the given length (exact integer count).
  Integer count_words(int length) const;

  // Calls fn for every accepted word of the given length in lexicographic
  // order, with the cursor reached after reading it.
  void for_each_word(int length, const std::function<void(const Word&, const Cursor&)>& fn) const;

  std::vector<Word> enumerate_words(int length) const;

 private:
  int alphabet_ = 2;
  std::vector<int> spine_digit_;  // spine_digit_[j] = digit j+1 of the sequence
  bool complete_ = false;
  int wrap_target_ = -1;  // folded landing state for the last spine edge
  int frontier_ = -1;     // frontier state index when incomplete

  void dfs(Word* w, Cursor cur, int remaining,
           const std::function<void(const Word&, const Cursor&)>& fn) const;
};

}  // namespace betathermo
