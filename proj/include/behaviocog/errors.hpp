#pragma once

#include <stdexcept>
#include <string>

namespace behaviocog {

/// Invalid parameters or configuration supplied by the caller.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed input data: traces, transcripts, stored records.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An attack or enumeration would exceed its configured work budget.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, double estimated_log2_work)
      : std::runtime_error(what), estimated_log2_work_(estimated_log2_work) {}

  double estimated_log2_work() const noexcept { return estimated_log2_work_; }

 private:
  double estimated_log2_work_;
};

/// Linear algebra over Z_d requested for a composite d.
class UnsupportedModulus : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A call arrived in the wrong protocol state (e.g. double submit).
class ProtocolError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Unknown user or session. The message never says which.
class NotFound : public std::runtime_error {
 public:
  NotFound() : std::runtime_error("unknown user or session") {}
};

}  // namespace behaviocog
