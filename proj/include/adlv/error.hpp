#pragma once

#include <stdexcept>
#include <string>

namespace adlv {

/// Base of all library errors. exit_code() is what the CLI returns.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual int exit_code() const { return 1; }
  virtual const char* kind() const { return "error"; }
};

/// Malformed element words, config strings, sigma descriptions, files.
class ParseError : public Error {
 public:
  using Error::Error;
  int exit_code() const override { return 2; }
  const char* kind() const override { return "parse"; }
};

/// Well-formed but invalid input: unknown type, bad generator index, ...
class ConfigError : public Error {
 public:
  using Error::Error;
  int exit_code() const override { return 2; }
  const char* kind() const override { return "config"; }
};

/// An internal cross-check failed (route disagreement, missing maximum).
class VerificationError : public Error {
 public:
  using Error::Error;
  int exit_code() const override { return 3; }
  const char* kind() const override { return "verification"; }
};

/// A search cap was reached before the computation could finish.
class ResourceError : public Error {
 public:
  using Error::Error;
  int exit_code() const override { return 4; }
  const char* kind() const override { return "resource"; }
};

}  // namespace adlv
