#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace poirev {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class UnknownAtomError : public Error {
 public:
  explicit UnknownAtomError(std::string name)
      : Error("unknown atom '" + name + "'"), name_(std::move(name)) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

/// Two world sets (or orders) over different world spaces were combined.
class SizeMismatch : public Error {
 public:
  using Error::Error;
};

/// A revision input with no models.
class InconsistentInput : public Error {
 public:
  InconsistentInput() : Error("revision input is inconsistent (empty model set)") {}
};

/// Malformed level list, rank vector, or text/JSON encoding of an order.
class InvalidOrder : public Error {
 public:
  using Error::Error;
};

class Flush2Violation : public Error {
 public:
  explicit Flush2Violation(std::size_t world)
      : Error("proper interval violated: plus rank of world " + std::to_string(world) +
              " is not strictly below its minus rank"),
        world_(world) {}
  std::size_t world() const noexcept { return world_; }

 private:
  std::size_t world_;
};

class Order3Violation : public Error {
 public:
  Order3Violation(std::size_t x, std::size_t y)
      : Error("plus/minus order mismatch between worlds " + std::to_string(x) + " and " +
              std::to_string(y)),
        x_(x),
        y_(y) {}
  std::size_t first() const noexcept { return x_; }
  std::size_t second() const noexcept { return y_; }

 private:
  std::size_t x_;
  std::size_t y_;
};

class NotTotal : public Error {
 public:
  using Error::Error;
};

class NotTransitive : public Error {
 public:
  using Error::Error;
};

/// A fixture operator was asked for a revision it does not record.
class FixtureLookupError : public Error {
 public:
  using Error::Error;
};

/// The requested world count exceeds the configured enumeration guard.
class DomainTooLarge : public Error {
 public:
  using Error::Error;
};

class UnknownPostulate : public Error {
 public:
  explicit UnknownPostulate(const std::string& id) : Error("unknown postulate id '" + id + "'") {}
};

class ArityMismatch : public Error {
 public:
  using Error::Error;
};

/// Operator applied to a state kind it does not accept.
class StateKindError : public Error {
 public:
  using Error::Error;
};

}  // namespace poirev
