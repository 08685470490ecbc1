#pragma once

#include <stdexcept>
#include <string>

namespace extremal {

// Base of every error raised by the library. The CLI maps ConfigError to
// exit code 2 and everything else to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class CatalogMiss : public Error {
 public:
  using Error::Error;
};

class DivergentIntegral : public Error {
 public:
  using Error::Error;
};

class ClassificationFailure : public Error {
 public:
  using Error::Error;
};

class ObstructionError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

// Raised by glue when mu and nu disagree on the interior cone.
class InconsistentMeasures : public Error {
 public:
  InconsistentMeasures(const std::string& what, double max_discrepancy)
      : Error(what), max_discrepancy_(max_discrepancy) {}
  double max_discrepancy() const noexcept { return max_discrepancy_; }

 private:
  double max_discrepancy_;
};

}  // namespace extremal
