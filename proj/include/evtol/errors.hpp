#pragma once

#include <stdexcept>
#include <string>

namespace evtol {

// Scenario/config problems: unreadable file, unknown key, invariant violation.
// The message always names the offending field.
class ScenarioError : public std::runtime_error {
 public:
  explicit ScenarioError(const std::string& msg) : std::runtime_error(msg) {}
};

// Model-domain failures during evaluation. These are recoverable: the
// optimizer catches them and substitutes a penalty, the CLI maps them to
// exit code 1.
enum class ModelErrorCode {
  kDesignOutOfBounds,
  kAlphaOutOfRange,      // post-stall request to the linear lift model
  kInfeasibleMission,    // e.g. climb segment longer than the whole trip
  kMassDivergence,       // MTOM fixed point did not settle
  kBadInput,             // non-positive density, radius, ... where required
};

class ModelError : public std::runtime_error {
 public:
  ModelError(ModelErrorCode code, const std::string& msg)
      : std::runtime_error(msg), code_(code) {}
  ModelErrorCode code() const { return code_; }

 private:
  ModelErrorCode code_;
};

}  // namespace evtol
