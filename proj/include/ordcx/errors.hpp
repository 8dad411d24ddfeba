#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ordcx {

/// Binary operation applied to elements living in different models.
class ModelMismatch : public std::invalid_argument {
 public:
  explicit ModelMismatch(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised by inverse(); carries the first coordinate where the element vanishes.
class NotInvertible : public std::domain_error {
 public:
  explicit NotInvertible(std::size_t index)
      : std::domain_error("element is not invertible: coordinate " + std::to_string(index) + " is zero"),
        index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

class InvalidRadius : public std::invalid_argument {
 public:
  explicit InvalidRadius(const std::string& what) : std::invalid_argument(what) {}
};

class NegativeInput : public std::domain_error {
 public:
  explicit NegativeInput(const std::string& what) : std::domain_error(what) {}
};

/// Extended-positive construction rejected (negative or NaN coordinate, or wrong model).
class InvalidExtended : public std::invalid_argument {
 public:
  explicit InvalidExtended(const std::string& what) : std::invalid_argument(what) {}
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Evaluation hit an inverse whose argument is not invertible.
class OutsideDomain : public std::domain_error {
 public:
  OutsideDomain(std::string subterm, std::size_t coordinate)
      : std::domain_error("outside domain: " + subterm + " vanishes at coordinate " + std::to_string(coordinate)),
        subterm_(std::move(subterm)),
        coordinate_(coordinate) {}
  const std::string& subterm() const noexcept { return subterm_; }
  std::size_t coordinate() const noexcept { return coordinate_; }

 private:
  std::string subterm_;
  std::size_t coordinate_;
};

class OutsideOpenDisk : public std::domain_error {
 public:
  explicit OutsideOpenDisk(const std::string& what) : std::domain_error(what) {}
};

class DepthTooSmall : public std::invalid_argument {
 public:
  explicit DepthTooSmall(const std::string& what) : std::invalid_argument(what) {}
};

/// A coordinate's running supremum crossed the overflow guard.
class Unbounded : public std::overflow_error {
 public:
  explicit Unbounded(std::size_t coordinate)
      : std::overflow_error("sequence is unbounded at coordinate " + std::to_string(coordinate)),
        coordinate_(coordinate) {}
  std::size_t coordinate() const noexcept { return coordinate_; }

 private:
  std::size_t coordinate_;
};

}  // namespace ordcx
