#pragma once

#include <stdexcept>
#include <string>

namespace eun {

// Base class for everything the engine throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed model: variables, arcs or potentials violate their invariants,
// or a strict build found a joint that is not Markov w.r.t. the graph.
class ModelError : public Error {
 public:
  using Error::Error;
};

// Sets, assignments or events that violate an operation's preconditions.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

// A measure or conditional that is undefined because an event is empty.
class UndefinedError : public Error {
 public:
  using Error::Error;
};

// An enumeration or intermediate factor would exceed the state cap.
class CapExceededError : public Error {
 public:
  using Error::Error;
};

// Two computation routes that must agree did not.
class NumericError : public Error {
 public:
  using Error::Error;
};

// Syntax or schema problem in a network or Bayes-net document.
class DocumentError : public Error {
 public:
  using Error::Error;
};

}  // namespace eun
