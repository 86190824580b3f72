#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace liaison {

/// Base class for every error the library throws on purpose.
class error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Invalid argument or violated precondition. CLI exit code 4.
class value_error : public error {
public:
  using error::error;
};

/// Malformed polynomial/ring text. Carries the byte offset of the offending
/// token so callers can point at it. CLI exit code 4.
class parse_error : public error {
public:
  parse_error(const std::string& what, std::size_t position)
      : error(what + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

/// A resource budget (steps, degree, variables, wall clock) ran out before
/// the computation finished. CLI exit code 3.
class budget_error : public error {
public:
  using error::error;
};

/// An internal cross-check that is a theorem failed; this signals a bug in
/// the library, not bad input. CLI exit code 2.
class verification_error : public error {
public:
  using error::error;
};

/// Resource limits for Groebner-basis-backed computations. Defaults match
/// the CLI defaults and are sized so the shipped acceptance jobs complete.
struct Budget {
  std::uint64_t max_steps = 1'000'000;  // reduction steps per GB run
  std::uint32_t max_degree = 12;        // total degree of admitted basis elements
  std::size_t max_variables = 16;       // ring size admitted to the GB engine
  double max_seconds = 300.0;           // wall clock per GB run
};

}  // namespace liaison
