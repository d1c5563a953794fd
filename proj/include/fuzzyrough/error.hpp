#ifndef FUZZYROUGH_ERROR_HPP
#define FUZZYROUGH_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fuzzyrough {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input. `position()` is a 0-based character offset into
/// the offending text, or npos when no position is meaningful.
class ParseError : public Error {
public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  explicit ParseError(const std::string& what, std::size_t position = npos)
      : Error(position == npos ? what : what + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

class DegreeOutOfRange : public Error {
public:
  using Error::Error;
};

class DimensionMismatch : public Error {
public:
  using Error::Error;
};

class UniverseMismatch : public Error {
public:
  UniverseMismatch() : Error("operands are defined over different universes") {}
  using Error::Error;
};

class NotAnEquivalence : public Error {
public:
  using Error::Error;
};

class PreconditionViolated : public Error {
public:
  using Error::Error;
};

class InvalidRelation : public Error {
public:
  using Error::Error;
};

class InvalidAlpha : public Error {
public:
  using Error::Error;
};

class UniverseTooLarge : public Error {
public:
  using Error::Error;
};

class NotALattice : public Error {
public:
  using Error::Error;
};

} // namespace fuzzyrough

#endif // FUZZYROUGH_ERROR_HPP
