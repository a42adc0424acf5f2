#pragma once

#include <stdexcept>
#include <string>

namespace poskit {

/// Base class for all poskit errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed or inconsistent input: bad JSON, schema violations,
/// dimension mismatches, invalid indices, broken model invariants.
class InputError : public Error {
public:
  using Error::Error;
};

/// Well-formed input outside an operation's hypotheses, e.g. asking for a
/// Seshadri constant of a non-ample line bundle. The message states the
/// violated hypothesis.
class Refusal : public Error {
public:
  using Error::Error;
};

/// A consistency condition that valid inputs cannot violate failed anyway.
class InternalError : public Error {
public:
  using Error::Error;
};

} // namespace poskit
