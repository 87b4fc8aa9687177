#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "betathermo/word.hpp"

namespace betathermo {

// Real-valued observable that depends on finitely many coordinates of a
// two-sided sequence: offsets -left .. +right around the evaluation point.
// Stored as a dense table over alphabet^(left+right+1) windows, indexed with
// the leftmost coordinate most significant.
class Potential {
 public:
  Potential() : Potential(2, 0, 0) {}
  Potential(int alphabet, int left, int right);

  static Potential zero(int alphabet);
  // weight * [coordinate 0 equals letter]
  static Potential indicator(int alphabet, int letter, double weight);

  // JSON file schema: {"alphabet": b, "window": [lo, hi], "table":
  // {"<letters>": value, ...}, "name": optional}. Window offsets satisfy
  // lo <= 0 <= hi; table keys are comma-separated letters of width
  // hi - lo + 1; missing entries are zero.
  static Potential from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;

  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }

  int alphabet() const { return alphabet_; }
  int left() const { return left_; }
  int right() const { return right_; }
  int window() const { return left_ + right_ + 1; }
  std::size_t table_size() const { return table_.size(); }

  double value_by_index(std::size_t idx) const { return table_[idx]; }
  void set(const std::vector<int>& window_letters, double v);
  double value(const std::vector<int>& window_letters) const;

  // Value at shift position pos of the two-sided point obtained by placing
  // the word at coordinates 0..size-1 and zeros everywhere else.
  double eval_padded(const Word& w, long pos) const;

  // Sum of eval_padded over pos = 0..size-1 (the energy of the padded word
  // across its own support).
  double energy(const Word& w) const;

  double sup_norm() const;

  // Largest change of the value when only the coordinate at the given
  // offset (in -left..right) varies.
  double osc(int offset) const;

  // Sum of osc over all offsets except 0; zero for single-site observables.
  double osc_away_from_center() const;

  // Total oscillation: sum of osc over every window offset. This is the
  // regularity constant entering all envelope and pinned-sum bounds.
  double total_osc() const;

 private:
  int alphabet_;
  int left_;
  int right_;
  std::string name_;
  std::vector<double> table_;

  std::size_t index_of(const std::vector<int>& window_letters) const;
};

// Per-offset oscillation summary of a potential: deltas[i] is the largest
// value change when only coordinate i varies; norm is their sum.
struct OscProfile {
  std::map<int, double> deltas;
  double norm = 0.0;
  double sup_norm = 0.0;
};

OscProfile osc_profile(const Potential& phi);

}  // namespace betathermo
