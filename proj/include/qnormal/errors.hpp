#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qnormal {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed triangulation text. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what);
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Gluing data that does not describe a valid compact 3-manifold triangulation.
class InvalidGluingError : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRangeError : public Error {
 public:
  using Error::Error;
};

class NonOrientableError : public Error {
 public:
  using Error::Error;
};

/// Two different quad types would coexist in one tetrahedron.
class IncompatibleSumError : public Error {
 public:
  IncompatibleSumError(std::size_t tetrahedron, const std::string& what)
      : Error(what), tetrahedron_(tetrahedron) {}
  std::size_t tetrahedron() const noexcept { return tetrahedron_; }

 private:
  std::size_t tetrahedron_;
};

class AdmissibilityError : public Error {
 public:
  using Error::Error;
};

/// Enumeration exceeded a configured ray or coordinate cap.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

class UnsupportedBoundaryError : public Error {
 public:
  using Error::Error;
};

/// Internal consistency failure; indicates a bug rather than bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace qnormal
