#pragma once

#include <stdexcept>
#include <string>

namespace cavlqu {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotHermitian : public Error {
 public:
  using Error::Error;
};

class NoConvergence : public Error {
 public:
  using Error::Error;
};

class NotPositive : public Error {
 public:
  using Error::Error;
};

class BadIndex : public Error {
 public:
  using Error::Error;
};

class BadDimension : public Error {
 public:
  using Error::Error;
};

class BadAmplitudes : public Error {
 public:
  using Error::Error;
};

class BadParameter : public Error {
 public:
  using Error::Error;
};

class NumericalNegative : public Error {
 public:
  using Error::Error;
};

class InvalidState : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace cavlqu
