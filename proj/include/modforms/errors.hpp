#pragma once

#include <stdexcept>
#include <string>

namespace mf {

// Bad arguments: odd weight, composite "prime", negative exponent, ...
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A coefficient was requested at or beyond the known truncation order.
class InsufficientPrecision : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Hecke spectrum has coincident eigenvalues for every operator tried.
class DegenerateSpectrum : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Checkpoint file failed to parse or violates the record schema.
class CorruptCheckpoint : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mf
