#ifndef TOGGLE_GROUP_ERROR_HPP
#define TOGGLE_GROUP_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace toggle_group
{

/// Base of every exception thrown by the library.
class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Degree zero, or two operands whose degrees disagree.
class DegreeError : public Error
{
public:
  using Error::Error;
};

/// A point, vertex, index or parameter outside its admissible range.
class RangeError : public Error
{
public:
  using Error::Error;
};

/// A vertex set that is not independent in its ambient graph.
class IndependenceError : public Error
{
public:
  using Error::Error;
};

/// A computation whose size exceeds a configured bound.
class ResourceError : public Error
{
public:
  using Error::Error;
};

/// Malformed text; `position` is the 0-based offset of the offending character.
class ParseError : public Error
{
public:
  ParseError(std::string const &what, std::size_t position)
    : Error(what + " at position " + std::to_string(position)),
      _position(position)
  {}

  std::size_t position() const noexcept { return _position; }

private:
  std::size_t _position;
};

} // namespace toggle_group

#endif // TOGGLE_GROUP_ERROR_HPP
