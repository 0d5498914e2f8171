#pragma once

#include <stdexcept>
#include <string>

namespace matchlab {

// All library failures surface as Error; the message is part of the contract.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller handed us an input outside an operation's standing hypotheses.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace matchlab
