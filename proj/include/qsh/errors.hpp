#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qsh {

/// Base of every error the library raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input; `position` is a 0-based byte offset.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error("parse error at column " + std::to_string(position + 1) + ": " + what),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// An argument outside an operation's domain (e.g. the empty word where a
/// nonempty one is required).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A required word lies outside the window a table-backed map is defined on.
class OutOfWindow : public Error {
 public:
  explicit OutOfWindow(const std::string& word, const std::string& context = {})
      : Error("word " + word + " is outside the window" + (context.empty() ? "" : " (" + context + ")")),
        word_(word) {}
  const std::string& word() const { return word_; }

 private:
  std::string word_;
};

class CompositionMismatch : public Error {
 public:
  using Error::Error;
};

class RestrictionMismatch : public Error {
 public:
  using Error::Error;
};

class InfeasibleWithinWindow : public Error {
 public:
  using Error::Error;
};

class DegenerateWindow : public Error {
 public:
  using Error::Error;
};

class MissingEntry : public Error {
 public:
  using Error::Error;
};

}  // namespace qsh
