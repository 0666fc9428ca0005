#pragma once

#include <stdexcept>

namespace vd {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A payoff table that does not cover the full profile product.
struct MissingCellError : Error {
  using Error::Error;
};

// A payoff vector whose length differs from the player count.
struct LengthMismatchError : Error {
  using Error::Error;
};

// Repeated action label within one player's action list.
struct DuplicateActionError : Error {
  using Error::Error;
};

// Profile of the wrong length, with an index out of range, or duplicated
// where a unique cell is expected.
struct InvalidProfileError : Error {
  using Error::Error;
};

// Negative input where grain quantities are required.
struct NegativePayoffError : Error {
  using Error::Error;
};

struct EmptyEquilibriumSetError : Error {
  using Error::Error;
};

struct AgentCountMismatchError : Error {
  using Error::Error;
};

// Agent referencing an action that does not exist in the stage game.
struct InvalidActionError : Error {
  using Error::Error;
};

struct EmptyTrajectoryError : Error {
  using Error::Error;
};

struct EmptyGridError : Error {
  using Error::Error;
};

// Grid or sweep naming a rule parameter that does not exist.
struct UnknownParameterError : Error {
  using Error::Error;
};

// Scenario file is not syntactically valid JSON.
struct ParseError : Error {
  using Error::Error;
};

// Scenario (or rule set) is well-formed but violates the schema or a value
// invariant. Messages carry the offending field path.
struct ValidationError : Error {
  using Error::Error;
};

struct IoError : Error {
  using Error::Error;
};

}  // namespace vd
