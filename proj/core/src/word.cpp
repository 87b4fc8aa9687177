#include "betathermo/word.hpp"

#include <cctype>
#include <sstream>

#include "betathermo/errors.hpp"

namespace betathermo {

Word Word::prefix(std::size_t n) const {
  return Word(std::vector<int>(letters.begin(), letters.begin() + std::min(n, size())));
}

Word Word::suffix(std::size_t n) const {
  n = std::min(n, size());
  return Word(std::vector<int>(letters.end() - n, letters.end()));
}

Word Word::concat(const Word& o) const {
  Word w = *this;
  w.letters.insert(w.letters.end(), o.letters.begin(), o.letters.end());
  return w;
}

Word Word::parse(const std::string& csv) {
  Word w;
  if (csv.empty()) return w;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw InvalidInput("empty letter in word '" + csv + "'");
    for (char c : item)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw InvalidInput("bad letter '" + item + "' in word '" + csv + "'");
    w.letters.push_back(std::stoi(item));
  }
  return w;
}

std::string Word::str() const {
  std::string out;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(letters[i]);
  }
  return out;
}

}  // namespace betathermo
