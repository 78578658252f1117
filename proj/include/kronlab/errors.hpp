#pragma once

#include <stdexcept>

namespace kronlab {

/// Malformed arguments: dimension mismatches, bad vertex indices, schema violations.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation was applied outside its mathematical domain (e.g. tau of a projective).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Random sampling did not produce a representation with the requested generic property.
class GenericityError : public std::runtime_error {
 public:
  GenericityError() : std::runtime_error("genericity not attained") {}
  using std::runtime_error::runtime_error;
};

/// A cluster-tilting query could not be resolved inside the finite window.
class WindowError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The cluster model disagrees with itself (a bookkeeping identity failed).
class ModelInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An explicit computation was requested beyond the configured size limits.
class ComputationLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace kronlab
