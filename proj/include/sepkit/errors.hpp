#pragma once

#include <stdexcept>
#include <string>

namespace sepkit {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or out-of-range input (files, ids, parameters).
class InputError : public Error {
 public:
  using Error::Error;
};

// An exhaustive routine was asked to run beyond its configured size cap.
class LimitError : public Error {
 public:
  using Error::Error;
};

// A tree decomposition failed validation.
class DecompositionError : public InputError {
 public:
  using InputError::InputError;
};

// The instance admits no solution (e.g. every label forbidden at a vertex).
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

// Something the algorithms guarantee did not hold. Indicates a bug or a
// plug-in that broke its contract.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace sepkit
