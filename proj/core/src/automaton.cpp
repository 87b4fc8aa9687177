#include "betathermo/automaton.hpp"

#include <string>

#include "betathermo/errors.hpp"

namespace betathermo {

PrefixAutomaton PrefixAutomaton::build(const DigitSeq& d, int depth) {
  check_structure(d);
  PrefixAutomaton a;
  a.alphabet_ = d.alphabet;
  if (d.periodicity) {
    int p = d.periodicity->preperiod, q = d.periodicity->period;
    a.spine_digit_.reserve(p + q);
    for (int j = 1; j <= p + q; ++j) a.spine_digit_.push_back(d.digit(j));
    a.complete_ = true;
    a.wrap_target_ = p;
  } else {
    if (depth < 0) depth = d.depth();
    a.spine_digit_.reserve(depth);
    for (int j = 1; j <= depth; ++j) a.spine_digit_.push_back(d.digit(j));
    a.complete_ = false;
    a.frontier_ = depth;
  }
  return a;
}

int PrefixAutomaton::step(int state, int letter) const {
  if (letter < 0 || letter >= alphabet_) return -1;
  if (!complete_ && state == frontier_)
    throw DepthExceeded("automaton frontier reached at depth " + std::to_string(frontier_) +
                        "; more expansion digits (or a periodicity certificate) are needed");
  int c = spine_digit_[state];
  if (letter > c) return -1;
  if (letter < c) return 0;
  int next = state + 1;
  if (next == static_cast<int>(spine_digit_.size())) return complete_ ? wrap_target_ : frontier_;
  return next;
}

bool PrefixAutomaton::step(Cursor& cur, int letter) const {
  int next = step(cur.state, letter);
  if (next < 0) return false;
  cur.suffix_len = (letter == spine_digit_[cur.state]) ? cur.suffix_len + 1 : 0;
  cur.state = next;
  return true;
}

std::optional<PrefixAutomaton::Cursor> PrefixAutomaton::run(const Word& w) const {
  Cursor cur;
  for (int letter : w)
    if (!step(cur, letter)) return std::nullopt;
  return cur;
}

Integer PrefixAutomaton::count_words(int length) const {
  if (length < 0) throw InvalidInput("word length must be >= 0");
  int m = states();
  std::vector<Integer> v(m, 0), nv(m);
  v[0] = 1;
  for (int t = 0; t < length; ++t) {
    for (Integer& x : nv) x = 0;
    for (int j = 0; j < m; ++j) {
      if (v[j] == 0) continue;
      if (!complete_ && j == frontier_)
        throw DepthExceeded("counting length-" + std::to_string(length) +
                            " words needs digits beyond depth " + std::to_string(frontier_));
      int c = spine_digit_[j];
      if (c > 0) nv[0] += v[j] * c;
      int next = j + 1;
      if (next == static_cast<int>(spine_digit_.size()))
        next = complete_ ? wrap_target_ : frontier_;
      nv[next] += v[j];
    }
    v.swap(nv);
  }
  Integer total = 0;
  for (const Integer& x : v) total += x;
  return total;
}

void PrefixAutomaton::dfs(Word* w, Cursor cur, int remaining,
                          const std::function<void(const Word&, const Cursor&)>& fn) const {
  if (remaining == 0) {
    fn(*w, cur);
    return;
  }
  for (int letter = 0; letter < alphabet_; ++letter) {
    Cursor next = cur;
    if (!step(next, letter)) continue;
    w->push_back(letter);
    dfs(w, next, remaining - 1, fn);
    w->letters.pop_back();
  }
}

void PrefixAutomaton::for_each_word(
    int length, const std::function<void(const Word&, const Cursor&)>& fn) const {
  if (length < 0) throw InvalidInput("word length must be >= 0");
  Word w;
  w.letters.reserve(length);
  dfs(&w, Cursor{}, length, fn);
}

std::vector<Word> PrefixAutomaton::enumerate_words(int length) const {
  std::vector<Word> out;
  for_each_word(length, [&out](const Word& w, const Cursor&) { out.push_back(w); });
  return out;
}

}  // namespace betathermo
