#pragma once

#include <stdexcept>
#include <string>

namespace wdlmp {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class TopologyError : public Error {
 public:
  using Error::Error;
};

/// Invalid experiment configuration; the message starts with the offending field.
class ConfigError : public Error {
 public:
  ConfigError(const std::string& field, const std::string& what)
      : Error(field + ": " + what), field_(field) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// A trial produced a non-finite or runaway state and must be discarded.
class DivergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace wdlmp
