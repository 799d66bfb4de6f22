#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace cvqaoa {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Bad argument or precondition violation (invalid grid, dimension mismatch, ...).
class InvalidArgument : public Error {
public:
  using Error::Error;
};

/// Malformed configuration or problem file. Carries the offending line when known.
class ConfigError : public Error {
public:
  ConfigError(const std::string& what, std::optional<std::size_t> line = std::nullopt)
    : Error(line ? "line " + std::to_string(*line) + ": " + what : what), line_(line) {}

  std::optional<std::size_t> line() const { return line_; }

private:
  std::optional<std::size_t> line_;
};

enum class GuardKind { Leakage, Aliasing, Overflow };

const char* to_string(GuardKind kind);

/// A numerical guard tripped; kind() tells which. The CLI maps it to exit status 2.
class NumericalGuardError : public Error {
public:
  NumericalGuardError(GuardKind kind, const std::string& what,
                      std::optional<std::size_t> step = std::nullopt);

  GuardKind kind() const { return kind_; }
  std::optional<std::size_t> step() const { return step_; }

private:
  GuardKind kind_;
  std::optional<std::size_t> step_;
};

} // namespace cvqaoa
