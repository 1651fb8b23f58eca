#pragma once

#include <stdexcept>
#include <string>

namespace fwythoff {

// Every error raised by the library derives from Error so callers can catch
// the family as a whole.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UndefinedRatioError : public Error {
 public:
  using Error::Error;
};

class IllegalMoveError : public Error {
 public:
  using Error::Error;
};

class CapacityError : public Error {
 public:
  using Error::Error;
};

class OutOfRangeError : public Error {
 public:
  using Error::Error;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

// Table/set parameters that do not fit together (different variants,
// conventions or bounds).
class MismatchError : public Error {
 public:
  using Error::Error;
};

class VersionMismatchError : public Error {
 public:
  using Error::Error;
};

class CorruptionError : public Error {
 public:
  using Error::Error;
};

}  // namespace fwythoff
