#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace relcomm {

// Base of every error raised by the library. The CLI maps the subclasses
// onto exit codes: CapError -> 3, everything else that reaches it -> 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input that is not a group (or not a valid argument).
class InputError : public Error {
 public:
  using Error::Error;
};

class NotAGroup : public InputError {
 public:
  NotAGroup(std::string const& what,
            std::optional<std::array<std::size_t, 3>> witness = std::nullopt)
      : InputError(what), witness_(witness) {}

  // (a, b, c) in the caller's original labels; for associativity failures
  // (ab)c != a(bc), for Latin failures (row/col, first, second).
  std::optional<std::array<std::size_t, 3>> const& witness() const noexcept {
    return witness_;
  }

 private:
  std::optional<std::array<std::size_t, 3>> witness_;
};

class NotAnAutomorphism : public InputError {
 public:
  NotAnAutomorphism(std::string const& what, std::size_t hElement,
                    std::size_t x, std::size_t y)
      : InputError(what), h_(hElement), x_(x), y_(y) {}
  std::size_t h_element() const noexcept { return h_; }
  std::size_t x() const noexcept { return x_; }
  std::size_t y() const noexcept { return y_; }

 private:
  std::size_t h_, x_, y_;
};

class NotAHomomorphism : public InputError {
 public:
  NotAHomomorphism(std::string const& what, std::size_t h1, std::size_t h2)
      : InputError(what), h1_(h1), h2_(h2) {}
  std::size_t first() const noexcept { return h1_; }
  std::size_t second() const noexcept { return h2_; }

 private:
  std::size_t h1_, h2_;
};

class NotNested : public InputError {
 public:
  using InputError::InputError;
};

class NoSuchPrime : public InputError {
 public:
  using InputError::InputError;
};

class BadParams : public InputError {
 public:
  using InputError::InputError;
};

class NotCoprime : public InputError {
 public:
  using InputError::InputError;
};

class Inapplicable : public InputError {
 public:
  using InputError::InputError;
};

class ParseError : public InputError {
 public:
  ParseError(std::string const& what, std::size_t position)
      : InputError(what), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class SchemaError : public InputError {
 public:
  SchemaError(std::string const& what, std::string field)
      : InputError(what), field_(std::move(field)) {}
  std::string const& field() const noexcept { return field_; }

 private:
  std::string field_;
};

// Size limits (construction cap, lattice cap).
class CapError : public Error {
 public:
  using Error::Error;
};

class OrderCapExceeded : public CapError {
 public:
  using CapError::CapError;
};

class LatticeCapExceeded : public CapError {
 public:
  using CapError::CapError;
};

}  // namespace relcomm
