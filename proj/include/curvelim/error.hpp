#ifndef CURVELIM_ERROR_HPP
#define CURVELIM_ERROR_HPP

#include <stdexcept>
#include <string>

namespace curvelim {

/// Base of all library exceptions.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent caller input (bad dimensions, non-hermitian
/// matrix flagged hermitian, degree overflow, unparsable JSON).
class InputError : public Error {
public:
  using Error::Error;
};

/// Iterative numerics gave up (root finder iteration cap, ...).
class ConvergenceError : public Error {
public:
  using Error::Error;
};

/// A construction hit a state its own theory excludes, e.g. an inconsistent
/// linear system that must be consistent.
class InternalError : public Error {
public:
  using Error::Error;
};

/// A structural check that must hold failed (vessel axioms after a
/// transform, convention validation).
class TheoremCheckError : public Error {
public:
  using Error::Error;
};

}  // namespace curvelim

#endif
