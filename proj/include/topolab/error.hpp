#pragma once

#include <stdexcept>
#include <string>

namespace topolab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller broke an API contract (mismatched topologies, out-of-range sizes).
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Malformed input: bad JSON, a family that is not a topology, a table that
/// is not an operation.
class SchemaError : public Error {
 public:
  using Error::Error;
};

/// A construction was asked for outside the hypotheses that guarantee it.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace topolab
