#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace betathermo {

// A finite word over the digit alphabet {0, ..., b-1}.
struct Word {
  std::vector<int> letters;

  Word() = default;
  explicit Word(std::vector<int> ls) : letters(std::move(ls)) {}
  Word(std::initializer_list<int> ls) : letters(ls) {}

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  int operator[](std::size_t i) const { return letters[i]; }
  int& operator[](std::size_t i) { return letters[i]; }
  auto begin() const { return letters.begin(); }
  auto end() const { return letters.end(); }
  void push_back(int a) { letters.push_back(a); }

  bool operator==(const Word& o) const { return letters == o.letters; }
  bool operator!=(const Word& o) const { return letters != o.letters; }
  bool operator<(const Word& o) const { return letters < o.letters; }

  Word prefix(std::size_t n) const;
  Word suffix(std::size_t n) const;
  Word concat(const Word& o) const;

  // "0,1,0" <-> Word{0,1,0}; parse rejects anything but comma-separated
  // non-negative integers (an empty string is the empty word).
  static Word parse(const std::string& csv);
  std::string str() const;
};

}  // namespace betathermo
