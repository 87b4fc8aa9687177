// betathermo: command-line front end for the beta-shift thermodynamics
// library. Subcommands:
//
//   expand     digits of the quasi-greedy expansion of 1 in a given base
//   validate   structural + admissibility checks and a certified base interval
//   lang       language queries (count, enum, member, suffix, zbar)
//   pressure   pressure curves from the two finite-volume modes
//   gibbs      cylinder estimates, defect profiles, envelopes, classification
//
// Exit codes: 0 success, 1 usage error, 2 domain error (structured JSON on
// standard error). All JSON output has sorted keys and floats rounded to 12
// significant digits, so identical inputs give byte-identical reports.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "betathermo/automaton.hpp"
#include "betathermo/certified.hpp"
#include "betathermo/digits.hpp"
#include "betathermo/errors.hpp"
#include "betathermo/gibbs.hpp"
#include "betathermo/numeric.hpp"
#include "betathermo/partition.hpp"
#include "betathermo/potential.hpp"
#include "betathermo/presets.hpp"
#include "betathermo/pressure.hpp"
#include "betathermo/report_json.hpp"
#include "betathermo/suffix.hpp"
#include "betathermo/word.hpp"

namespace bt = betathermo;
using nlohmann::json;

namespace {

// ---------------------------------------------------------------------------
// shared option bundles

struct DigitSource {
  std::string file;
  std::string preset;
  std::string beta_expr;
  int depth = 64;

  void add_options(CLI::App* cmd, bool with_beta) {
    auto* f = cmd->add_option("--digits", file, "digit-sequence file");
    auto* p =
        cmd->add_option("--preset", preset, "built-in sequence: golden, three-halves (3/2), tribonacci, witness");
    f->excludes(p);
    if (with_beta) {
      auto* b = cmd->add_option("--beta", beta_expr,
                                "base expression, e.g. \"(1+sqrt 5)/2\", \"3/2\", \"1.8392867552\"");
      b->excludes(f);
      b->excludes(p);
    }
    cmd->add_option("--depth", depth, "stored digit depth for computed/aperiodic sequences")
        ->check(CLI::PositiveNumber);
  }

  bt::DigitSeq load(const std::string& cmd_name) const {
    if (!file.empty()) {
      std::ifstream in(file);
      if (!in) throw bt::InvalidInput("cannot open digit file '" + file + "'");
      return bt::read_digit_file(in);
    }
    if (!preset.empty()) return bt::make_preset(preset, depth).digits;
    if (!beta_expr.empty()) return bt::expand_one(bt::parse_beta(beta_expr), depth);
    throw CLI::RequiredError(cmd_name + " needs --digits, --preset, or --beta");
  }

  // Human-readable description of where the digits came from, plus a fast
  // numeric estimate of the base, for report headers.
  json describe(const bt::DigitSeq& d) const {
    json j;
    if (!preset.empty()) {
      j["source"] = "preset:" + preset;
      j["expression"] = bt::make_preset(preset, depth).beta_text;
    } else if (!file.empty()) {
      j["source"] = "file:" + file;
    } else {
      j["source"] = "expression";
      j["expression"] = beta_expr;
    }
    j["approx"] = bt::stable_num(bt::beta_estimate(d));
    return j;
  }
};

struct PotentialSource {
  std::string file;

  void add_options(CLI::App* cmd) {
    cmd->add_option("--potential", file,
                    "potential JSON file {\"alphabet\", \"window\", \"table\"}; default zero");
  }

  bt::Potential load(const bt::DigitSeq& d) const {
    if (file.empty()) return bt::Potential::zero(d.alphabet);
    std::ifstream in(file);
    if (!in) throw bt::InvalidInput("cannot open potential file '" + file + "'");
    json j;
    try {
      in >> j;
    } catch (const json::exception& e) {
      throw bt::InvalidInput("potential file '" + file + "' is not valid JSON: " + e.what());
    }
    bt::Potential phi = bt::Potential::from_json(j);
    if (phi.alphabet() != d.alphabet)
      throw bt::InvalidInput("potential alphabet " + std::to_string(phi.alphabet()) +
                             " does not match digit alphabet " + std::to_string(d.alphabet));
    return phi;
  }
};

// ---------------------------------------------------------------------------
// output helpers

std::string csv_num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

// Words serialize with commas, so CSV cells holding them need quoting.
std::string csv_word(const bt::Word& w) { return "\"" + w.str() + "\""; }

void emit_json(const json& j) { std::cout << j.dump(2) << "\n"; }

enum class Format { Json, Csv, Text };

Format parse_format(const std::string& s, Format fallback) {
  if (s.empty()) return fallback;
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  if (s == "text") return Format::Text;
  throw CLI::ValidationError("--format must be json, csv, or text");
}

// ---------------------------------------------------------------------------
// expand

struct ExpandCmd {
  DigitSource src;
  std::string out_file;
  std::string format;

  void run() const {
    bt::DigitSeq d = src.load("expand");
    Format fmt = parse_format(format, Format::Text);
    if (!out_file.empty()) {
      std::ofstream out(out_file);
      if (!out) throw bt::InvalidInput("cannot open output file '" + out_file + "'");
      bt::write_digit_file(out, d);
    }
    if (fmt == Format::Json) {
      json j{{"digits", bt::to_json(d)}, {"beta", src.describe(d)}};
      emit_json(j);
    } else {
      bt::write_digit_file(std::cout, d);
    }
  }
};

// ---------------------------------------------------------------------------
// validate

struct ValidateCmd {
  DigitSource src;
  std::string format;

  void run() const {
    bt::DigitSeq d = src.load("validate");
    bt::AdmissibilityReport adm = bt::validate_admissible(d);
    json j{{"alphabet", d.alphabet},
           {"depth", d.depth()},
           {"eventually_periodic", d.periodicity.has_value()},
           {"admissibility", bt::to_json(adm)}};
    if (adm.admissible) {
      try {
        bt::BetaInterval bi = bt::beta_from_digits(d, bt::Rational(1, 1000000000000LL));
        j["beta_interval"] = bt::to_json(bi);
      } catch (const bt::NoRoot& e) {
        j["beta_interval"] = nullptr;
        j["beta_error"] = {{"error", e.code()}, {"message", e.what()}};
      }
    } else {
      j["beta_interval"] = nullptr;
    }
    Format fmt = parse_format(format, Format::Json);
    if (fmt == Format::Text) {
      std::cout << (adm.admissible ? "admissible" : "NOT admissible") << "\n";
      if (!adm.admissible)
        std::cout << "first violation: shift " << adm.shift << ", position " << adm.position
                  << "\n";
      if (adm.zero_tail_warning)
        std::cout << "warning: stored digits end in a zero run reaching the depth horizon\n";
      if (j.contains("beta_interval") && !j["beta_interval"].is_null())
        std::cout << "beta ~ " << j["beta_interval"]["midpoint"].dump() << "\n";
    } else {
      emit_json(j);
    }
  }
};

// ---------------------------------------------------------------------------
// lang

struct LangCmd {
  DigitSource src;
  std::string word_csv;
  int n = 8;
  std::string format;

  json word_record(const bt::DigitSeq& d, const bt::PrefixAutomaton& a, const bt::Word& w,
                   bool require_member) const {
    json j{{"word", w.str()}};
    if (!a.is_member(w)) {
      if (require_member) throw bt::NotInLanguage("word " + w.str() + " is not admissible");
      j["in_language"] = false;
      j["s"] = nullptr;
      j["v"] = nullptr;
      j["hat"] = nullptr;
      j["q"] = nullptr;
      j["z"] = nullptr;
      return j;
    }
    bt::SuffixInfo info = bt::suffix_info(d, a, w);
    j["in_language"] = true;
    j["s"] = info.s.str();
    j["v"] = info.v.str();
    j["hat"] = info.hat.str();
    j["q"] = info.q;
    j["z"] = info.zero_run.resolved ? json(info.zero_run.length) : json(nullptr);
    return j;
  }

  void run_count() const {
    bt::DigitSeq d = src.load("lang count");
    bt::PrefixAutomaton a = bt::PrefixAutomaton::build(d);
    bt::Integer cnt = a.count_words(n);
    Format fmt = parse_format(format, Format::Json);
    if (fmt == Format::Text) {
      std::cout << cnt.str() << "\n";
      return;
    }
    emit_json(json{{"n", n}, {"count", cnt.str()}});
  }

  void run_enum() const {
    bt::DigitSeq d = src.load("lang enum");
    bt::PrefixAutomaton a = bt::PrefixAutomaton::build(d);
    Format fmt = parse_format(format, Format::Json);
    if (fmt == Format::Text) {
      a.for_each_word(n, [](const bt::Word& w, const bt::PrefixAutomaton::Cursor&) {
        std::cout << w.str() << "\n";
      });
      return;
    }
    json words = json::array();
    a.for_each_word(n, [&](const bt::Word& w, const bt::PrefixAutomaton::Cursor&) {
      words.push_back(w.str());
    });
    emit_json(json{{"n", n}, {"words", words}});
  }

  void run_member() const {
    bt::DigitSeq d = src.load("lang member");
    bt::PrefixAutomaton a = bt::PrefixAutomaton::build(d);
    emit_json(word_record(d, a, bt::Word::parse(word_csv), false));
  }

  void run_suffix() const {
    bt::DigitSeq d = src.load("lang suffix");
    bt::PrefixAutomaton a = bt::PrefixAutomaton::build(d);
    emit_json(word_record(d, a, bt::Word::parse(word_csv), true));
  }

  void run_zbar() const {
    bt::DigitSeq d = src.load("lang zbar");
    bt::ZbarProfile prof = bt::zbar_profile(d, n);
    Format fmt = parse_format(format, Format::Json);
    if (fmt == Format::Csv) {
      std::cout << "n,zbar,ratio\n";
      for (std::size_t i = 0; i < prof.values.size(); ++i)
        std::cout << (i + 1) << "," << prof.values[i] << "," << csv_num(prof.ratios[i]) << "\n";
      return;
    }
    json j = bt::to_json(prof);
    j["n"] = n;
    emit_json(j);
  }
};

// ---------------------------------------------------------------------------
// pressure

struct PressureCmd {
  DigitSource src;
  PotentialSource pot;
  int nmax = 10;
  std::string mode = "both";
  std::string format;

  void run() const {
    if (mode != "full" && mode != "loop" && mode != "both")
      throw CLI::ValidationError("--mode must be full, loop, or both");
    bt::DigitSeq d = src.load("pressure");
    bt::PrefixAutomaton a = bt::PrefixAutomaton::build(d);
    bt::Potential phi = pot.load(d);
    bt::PressureEstimate est = bt::estimate_pressure(a, phi, nmax);
    Format fmt = parse_format(format, Format::Csv);
    if (fmt == Format::Json) {
      json j = bt::to_json(est);
      j["beta"] = src.describe(d);
      j["mode"] = mode;
      j["nmax"] = nmax;
      emit_json(j);
      return;
    }
    if (mode == "both") {
      std::cout << "n,pressure_full,pressure_loop\n";
      for (int i = 0; i <= nmax; ++i)
        std::cout << i << "," << csv_num(est.full[static_cast<std::size_t>(i)]) << ","
                  << csv_num(est.free_words[static_cast<std::size_t>(i)]) << "\n";
    } else {
      const auto& col = mode == "full" ? est.full : est.free_words;
      std::cout << "n,pressure_" << mode << "\n";
      for (int i = 0; i <= nmax; ++i)
        std::cout << i << "," << csv_num(col[static_cast<std::size_t>(i)]) << "\n";
    }
  }
};

// ---------------------------------------------------------------------------
// gibbs

struct GibbsCmd {
  DigitSource src;
  PotentialSource pot;
  std::string word_csv;
  int length = 0;
  int n = 10;
  int m = 4;
  double eps = 0.05;
  double p_hat = std::numeric_limits<double>::quiet_NaN();
  std::string mode = "estimator";
  std::string format;

  void run_estimate() const {
    bt::DigitSeq d = src.load("gibbs estimate");
    bt::PrefixAutomaton a = bt::PrefixAutomaton::build(d);
    bt::Potential phi = pot.load(d);
    json j{{"beta", src.describe(d)}, {"mode", "estimator"}, {"n", n}};
    if (!word_csv.empty()) {
      bt::Word u = bt::Word::parse(word_csv);
      j["word"] = u.str();
      j["estimate"] = bt::stable_num(bt::cylinder_estimate(a, phi, n, u));
    } else if (length > 0) {
      j["length"] = length;
      j["distribution"] = bt::to_json(bt::cylinder_distribution(a, phi, n, length));
    } else {
      throw CLI::RequiredError("gibbs estimate needs --word or --length");
    }
    emit_json(j);
  }

  void run_defect() const {
    if (mode != "estimator" && mode != "oracle")
      throw CLI::ValidationError("--mode must be estimator or oracle");
    bt::DigitSeq d = src.load("gibbs defect");
    bt::PrefixAutomaton a = bt::PrefixAutomaton::build(d);
    bt::Potential phi = pot.load(d);
    bt::DefectMode dm = mode == "oracle" ? bt::DefectMode::Oracle : bt::DefectMode::Estimator;
    bt::DefectReport rep = bt::weak_gibbs_defect(a, phi, dm, m, n, p_hat);
    Format fmt = parse_format(format, Format::Json);
    if (fmt == Format::Csv) {
      std::cout << "m,defect,argmax,boundary_correction\n";
      for (const auto& p : rep.points)
        std::cout << p.m << "," << csv_num(p.defect) << "," << csv_word(p.argmax) << ","
                  << csv_num(p.boundary_correction) << "\n";
      return;
    }
    json j = bt::to_json(rep);
    j["beta"] = src.describe(d);
    j["m"] = m;
    emit_json(j);
  }

  void run_envelope() const {
    bt::DigitSeq d = src.load("gibbs envelope");
    bt::PrefixAutomaton a = bt::PrefixAutomaton::build(d);
    bt::Potential phi = pot.load(d);
    bt::EnvelopeReport rep = bt::envelope_check(d, a, phi, n, m, eps, p_hat);
    Format fmt = parse_format(format, Format::Csv);
    if (fmt == Format::Csv) {
      std::cout << "word,estimate,lower,upper,zero_run,contained\n";
      for (const auto& row : rep.rows)
        std::cout << csv_word(row.u) << "," << csv_num(row.estimate) << ","
                  << csv_num(row.lower) << "," << csv_num(row.upper) << "," << row.zero_run
                  << "," << (row.contained ? 1 : 0) << "\n";
      return;
    }
    json j = bt::to_json(rep);
    j["beta"] = src.describe(d);
    emit_json(j);
  }

  void run_classify() const {
    bt::DigitSeq d = src.load("gibbs classify");
    bt::PrefixAutomaton a = bt::PrefixAutomaton::build(d);
    bt::Potential phi = pot.load(d);
    bt::Classification cls = bt::classify(d, a, phi, n, eps);
    json j = bt::to_json(cls);
    j["beta"] = src.describe(d);
    j["m"] = m;
    j["n"] = n;
    j["eps"] = bt::stable_num(eps);
    j["witnesses"] = bt::to_json(bt::make_witnesses(d, m));
    emit_json(j);
  }

  void run_witness() const {
    bt::DigitSeq d = src.load("gibbs witness");
    json j{{"beta", src.describe(d)},
           {"m", m},
           {"witnesses", bt::to_json(bt::make_witnesses(d, m))}};
    emit_json(j);
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"beta-shift thermodynamics toolkit"};
  app.require_subcommand(1);

  ExpandCmd expand;
  ValidateCmd validate;
  LangCmd lang;
  PressureCmd pressure;
  GibbsCmd gibbs;

  // expand
  auto* cmd_expand = app.add_subcommand("expand", "digits of the expansion of 1 in a base");
  expand.src.add_options(cmd_expand, true);
  cmd_expand->add_option("--out", expand.out_file, "also write the digit file here");
  cmd_expand->add_option("--format", expand.format, "json or text (default text)");
  cmd_expand->callback([&] { expand.run(); });

  // validate
  auto* cmd_validate =
      app.add_subcommand("validate", "admissibility check and certified base interval");
  validate.src.add_options(cmd_validate, true);
  cmd_validate->add_option("--format", validate.format, "json or text (default json)");
  cmd_validate->callback([&] { validate.run(); });

  // lang
  auto* cmd_lang = app.add_subcommand("lang", "language queries");
  cmd_lang->require_subcommand(1);
  auto add_lang_sub = [&](const char* name, const char* help, bool needs_word,
                          void (LangCmd::*fn)() const) {
    auto* sub = cmd_lang->add_subcommand(name, help);
    lang.src.add_options(sub, false);
    if (needs_word)
      sub->add_option("--word", lang.word_csv, "comma-separated letters, e.g. 0,1,0")
          ->required();
    else
      sub->add_option("--n", lang.n, "word length / profile depth")->check(CLI::PositiveNumber);
    sub->add_option("--format", lang.format, "json, csv, or text");
    sub->callback([&lang, fn] { (lang.*fn)(); });
    return sub;
  };
  add_lang_sub("count", "number of admissible words of length n", false, &LangCmd::run_count);
  add_lang_sub("enum", "admissible words of length n in lexicographic order", false,
               &LangCmd::run_enum);
  add_lang_sub("member", "membership plus suffix decomposition of a word", true,
               &LangCmd::run_member);
  add_lang_sub("suffix", "suffix decomposition (errors on non-members)", true,
               &LangCmd::run_suffix);
  add_lang_sub("zbar", "running maximum of forced-zero runs up to n", false, &LangCmd::run_zbar);

  // pressure
  auto* cmd_pressure = app.add_subcommand("pressure", "pressure curves (CSV by default)");
  pressure.src.add_options(cmd_pressure, true);
  pressure.pot.add_options(cmd_pressure);
  cmd_pressure->add_option("--nmax", pressure.nmax, "largest window parameter n")
      ->check(CLI::NonNegativeNumber);
  cmd_pressure->add_option("--mode", pressure.mode, "full, loop, or both (default both)");
  cmd_pressure->add_option("--format", pressure.format, "csv or json (default csv)");
  cmd_pressure->callback([&] { pressure.run(); });

  // gibbs
  auto* cmd_gibbs = app.add_subcommand("gibbs", "equilibrium-measure diagnostics");
  cmd_gibbs->require_subcommand(1);
  auto add_gibbs_sub = [&](const char* name, const char* help, void (GibbsCmd::*fn)() const) {
    auto* sub = cmd_gibbs->add_subcommand(name, help);
    gibbs.src.add_options(sub, false);
    gibbs.pot.add_options(sub);
    sub->add_option("--n", gibbs.n, "configuration window parameter")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--m", gibbs.m, "cylinder length bound")->check(CLI::PositiveNumber);
    sub->add_option("--eps", gibbs.eps, "slack in envelope/classification constants")
        ->check(CLI::PositiveNumber);
    sub->add_option("--p-hat", gibbs.p_hat, "pressure override (default: estimate at n)");
    sub->add_option("--format", gibbs.format, "json or csv");
    sub->callback([&gibbs, fn] { (gibbs.*fn)(); });
    return sub;
  };
  auto* sub_est =
      add_gibbs_sub("estimate", "finite-volume cylinder estimate", &GibbsCmd::run_estimate);
  sub_est->add_option("--word", gibbs.word_csv, "cylinder word, comma-separated");
  sub_est->add_option("--length", gibbs.length, "estimate all cylinders of this length");
  auto* sub_def = add_gibbs_sub("defect", "defect profile D_m", &GibbsCmd::run_defect);
  sub_def->add_option("--mode", gibbs.mode, "estimator or oracle (default estimator)");
  add_gibbs_sub("envelope", "two-sided cylinder envelope check", &GibbsCmd::run_envelope);
  add_gibbs_sub("classify", "weak-Gibbs classification", &GibbsCmd::run_classify);
  add_gibbs_sub("witness", "zero-run witness words", &GibbsCmd::run_witness);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const bt::Error& e) {
    std::cerr << json{{"error", e.code()}, {"message", e.what()}}.dump() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", "InternalError"}, {"message", e.what()}}.dump() << "\n";
    return 2;
  }
  return 0;
}
