#include "betathermo/potential.hpp"

#include <algorithm>
#include <cmath>
#include <nlohmann/json.hpp>

#include "betathermo/errors.hpp"

namespace betathermo {

Potential::Potential(int alphabet, int left, int right)
    : alphabet_(alphabet), left_(left), right_(right) {
  if (alphabet < 2) throw InvalidInput("potential alphabet must be at least 2");
  if (left < 0 || right < 0) throw InvalidInput("potential window offsets must be >= 0");
  if (left + right + 1 > 12) throw WindowTooLarge("potential window wider than 12 coordinates");
  std::size_t n = 1;
  for (int i = 0; i < window(); ++i) {
    if (n > (std::size_t{1} << 40) / static_cast<std::size_t>(alphabet_))
      throw WindowTooLarge("potential table would exceed 2^40 entries");
    n *= static_cast<std::size_t>(alphabet_);
  }
  table_.assign(n, 0.0);
}

Potential Potential::zero(int alphabet) { return Potential(alphabet, 0, 0); }

Potential Potential::indicator(int alphabet, int letter, double weight) {
  Potential p(alphabet, 0, 0);
  if (letter < 0 || letter >= alphabet)
    throw InvalidInput("indicator letter outside alphabet");
  p.table_[static_cast<std::size_t>(letter)] = weight;
  return p;
}

std::size_t Potential::index_of(const std::vector<int>& window_letters) const {
  if (static_cast<int>(window_letters.size()) != window())
    throw InvalidInput("window letter count does not match potential window");
  std::size_t idx = 0;
  for (int a : window_letters) {
    if (a < 0 || a >= alphabet_) throw InvalidInput("window letter outside alphabet");
    idx = idx * static_cast<std::size_t>(alphabet_) + static_cast<std::size_t>(a);
  }
  return idx;
}

void Potential::set(const std::vector<int>& window_letters, double v) {
  table_[index_of(window_letters)] = v;
}

double Potential::value(const std::vector<int>& window_letters) const {
  return table_[index_of(window_letters)];
}

double Potential::eval_padded(const Word& w, long pos) const {
  std::size_t idx = 0;
  long m = w.size();
  for (int off = -left_; off <= right_; ++off) {
    long i = pos + off;
    int a = (i >= 0 && i < m) ? w[static_cast<std::size_t>(i)] : 0;
    idx = idx * static_cast<std::size_t>(alphabet_) + static_cast<std::size_t>(a);
  }
  return table_[idx];
}

double Potential::energy(const Word& w) const {
  double total = 0.0;
  for (long pos = 0; pos < static_cast<long>(w.size()); ++pos) total += eval_padded(w, pos);
  return total;
}

double Potential::sup_norm() const {
  double m = 0.0;
  for (double v : table_) m = std::max(m, std::abs(v));
  return m;
}

double Potential::osc(int offset) const {
  if (offset < -left_ || offset > right_)
    throw InvalidInput("oscillation offset outside potential window");
  // stride of the varying coordinate in the big-endian table index
  std::size_t stride = 1;
  for (int i = offset; i < right_; ++i) stride *= static_cast<std::size_t>(alphabet_);
  double worst = 0.0;
  std::size_t block = stride * static_cast<std::size_t>(alphabet_);
  for (std::size_t base = 0; base < table_.size(); base += block) {
    for (std::size_t rem = 0; rem < stride; ++rem) {
      double lo = table_[base + rem], hi = lo;
      for (int a = 1; a < alphabet_; ++a) {
        double v = table_[base + rem + static_cast<std::size_t>(a) * stride];
        lo = std::min(lo, v);
        hi = std::max(hi, v);
      }
      worst = std::max(worst, hi - lo);
    }
  }
  return worst;
}

double Potential::osc_away_from_center() const {
  double total = 0.0;
  for (int off = -left_; off <= right_; ++off)
    if (off != 0) total += osc(off);
  return total;
}

double Potential::total_osc() const {
  double total = 0.0;
  for (int off = -left_; off <= right_; ++off) total += osc(off);
  return total;
}

Potential Potential::from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InvalidInput("potential JSON must be an object");
  if (!j.contains("alphabet") || !j.at("alphabet").is_number_integer())
    throw InvalidInput("potential JSON needs an integer \"alphabet\" field");
  int alphabet = j.at("alphabet").get<int>();
  int lo = 0, hi = 0;
  if (j.contains("window")) {
    const auto& w = j.at("window");
    if (!w.is_array() || w.size() != 2 || !w[0].is_number_integer() ||
        !w[1].is_number_integer())
      throw InvalidInput("potential \"window\" must be an integer pair [lo, hi]");
    lo = w[0].get<int>();
    hi = w[1].get<int>();
    if (lo > 0 || hi < 0)
      throw InvalidInput("potential window [lo, hi] must contain offset 0");
  }
  Potential p(alphabet, -lo, hi);
  if (j.contains("name")) p.name_ = j.at("name").get<std::string>();
  if (j.contains("table")) {
    const auto& table = j.at("table");
    if (!table.is_object())
      throw InvalidInput("potential \"table\" must map comma-separated letters to values");
    for (const auto& [key, val] : table.items()) {
      Word letters = Word::parse(key);
      if (static_cast<int>(letters.size()) != p.window())
        throw InvalidInput("table key \"" + key + "\" does not match the window width " +
                           std::to_string(p.window()));
      p.set(letters.letters, val.get<double>());
    }
  }
  return p;
}

nlohmann::json Potential::to_json() const {
  nlohmann::json table = nlohmann::json::object();
  std::vector<int> letters(static_cast<std::size_t>(window()), 0);
  for (std::size_t idx = 0; idx < table_.size(); ++idx) {
    if (table_[idx] == 0.0) continue;  // missing entries read back as zero
    std::size_t rest = idx;
    for (int i = window() - 1; i >= 0; --i) {
      letters[static_cast<std::size_t>(i)] = static_cast<int>(rest % alphabet_);
      rest /= static_cast<std::size_t>(alphabet_);
    }
    table[Word{letters}.str()] = table_[idx];
  }
  nlohmann::json j{{"alphabet", alphabet_},
                   {"window", {-left_, right_}},
                   {"table", table}};
  if (!name_.empty()) j["name"] = name_;
  return j;
}

OscProfile osc_profile(const Potential& phi) {
  OscProfile prof;
  for (int off = -phi.left(); off <= phi.right(); ++off) {
    double d = phi.osc(off);
    prof.deltas[off] = d;
    prof.norm += d;
  }
  prof.sup_norm = phi.sup_norm();
  return prof;
}

}  // namespace betathermo
