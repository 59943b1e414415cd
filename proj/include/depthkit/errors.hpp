#ifndef DEPTHKIT_ERRORS_HPP
#define DEPTHKIT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace depthkit {

class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Raised when an enumeration or a linear space grows past its configured cap.
class CapExceeded : public Error
{
public:
  CapExceeded(std::string what_grew, std::size_t dimension, std::size_t cap)
  : Error(what_grew + " has size " + std::to_string(dimension) +
          " exceeding cap " + std::to_string(cap)),
    dimension_(dimension), cap_(cap)
  {}

  std::size_t dimension() const { return dimension_; }
  std::size_t cap() const { return cap_; }

private:
  std::size_t dimension_;
  std::size_t cap_;
};

class ElementNotInGroup : public Error
{
public:
  using Error::Error;
};

class NotASubgroup : public Error
{
public:
  using Error::Error;
};

class SplittingFailure : public Error
{
public:
  using Error::Error;
};

class LiftInconsistency : public Error
{
public:
  using Error::Error;
};

class NotInT : public Error
{
public:
  using Error::Error;
};

class UnitMissing : public Error
{
public:
  using Error::Error;
};

class ParseError : public Error
{
public:
  ParseError(const std::string &msg, std::size_t line = 0, std::size_t column = 0)
  : Error(line ? msg + " (line " + std::to_string(line) + ", column " +
                     std::to_string(column) + ")"
               : msg),
    line_(line), column_(column)
  {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

} // namespace depthkit

#endif // DEPTHKIT_ERRORS_HPP
