#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rectree {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Rational division (or inversion) by zero.
class DivisionByZero : public Error {
public:
  DivisionByZero() : Error("division by zero") {}
};

/// A window passed to a recurrence does not have order_k entries.
class BadWindow : public Error {
public:
  BadWindow(std::size_t expected, std::size_t got)
      : Error("bad window: expected " + std::to_string(expected) +
              " value(s), got " + std::to_string(got)),
        expected_(expected), got_(got) {}

  std::size_t expected() const noexcept { return expected_; }
  std::size_t got() const noexcept { return got_; }

private:
  std::size_t expected_;
  std::size_t got_;
};

/// The requested operation is outside the implemented degree range.
class Unsupported : public Error {
public:
  using Error::Error;
};

/// A sequence generator hit a zero divisor while producing term `index`.
class ZeroDivision : public Error {
public:
  ZeroDivision(std::string sequence, long index)
      : Error(sequence + ": zero divisor while computing term " +
              std::to_string(index)),
        sequence_(std::move(sequence)), index_(index) {}

  const std::string& sequence() const noexcept { return sequence_; }
  long index() const noexcept { return index_; }

private:
  std::string sequence_;
  long index_;
};

/// Precondition violation on an argument.
class InvalidArgument : public Error {
public:
  using Error::Error;
};

}  // namespace rectree
