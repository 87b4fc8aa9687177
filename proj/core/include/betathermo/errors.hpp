#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace betathermo {

// Base for all domain errors raised by the library. Carries a stable machine
// code alongside the human message; the CLI maps these to exit status 2.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

// Certified interval arithmetic could not resolve a ceiling even at the
// configured precision cap (or the input interval is inherently too wide).
struct PrecisionExhausted : Error {
  explicit PrecisionExhausted(const std::string& w) : Error("PrecisionExhausted", w) {}
};

// beta is certified to be an integer; integer bases are out of scope.
struct IntegerBeta : Error {
  explicit IntegerBeta(const std::string& w) : Error("IntegerBeta", w) {}
};

// The digit sequence admits no base beta > 1 (or forces an integer base).
struct NoRoot : Error {
  explicit NoRoot(const std::string& w) : Error("NoRoot", w) {}
};

// An operation needed digits beyond the stored depth of a non-periodic sequence.
struct DepthExceeded : Error {
  explicit DepthExceeded(const std::string& w) : Error("DepthExceeded", w) {}
};

// A word fed to a language operation is not admissible.
struct NotInLanguage : Error {
  explicit NotInLanguage(const std::string& w) : Error("NotInLanguage", w) {}
};

// A potential window (or derived table) exceeds the exhaustive-enumeration budget.
struct WindowTooLarge : Error {
  explicit WindowTooLarge(const std::string& w) : Error("WindowTooLarge", w) {}
};

// The digit sequence carries no periodicity certificate, so no finite
// presentation (and no exact reference measure) exists.
struct NotEventuallyPeriodic : Error {
  explicit NotEventuallyPeriodic(const std::string& w) : Error("NotEventuallyPeriodic", w) {}
};

// A configuration window [-n, n] is too small to hold the requested word.
struct WindowTooSmall : Error {
  explicit WindowTooSmall(const std::string& w) : Error("WindowTooSmall", w) {}
};

// Malformed files, expressions, certificates, or out-of-contract arguments.
struct InvalidInput : Error {
  explicit InvalidInput(const std::string& w) : Error("InvalidInput", w) {}
};

}  // namespace betathermo
