#pragma once

#include <stdexcept>

namespace tokenham {

// Base class for all domain errors thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidEdge : Error { using Error::Error; };
struct InvalidOrder : Error { using Error::Error; };
struct InvalidVertex : Error { using Error::Error; };
struct InvalidK : Error { using Error::Error; };
struct InvalidPair : Error { using Error::Error; };
struct InvalidCut : Error { using Error::Error; };
struct InvalidHamPath : Error { using Error::Error; };
struct RangeExceeded : Error { using Error::Error; };

// A constructed cycle failed its verifier gate. This signals a bug in the
// construction itself and is never returned as a normal result.
struct ConstructionInvalid : Error { using Error::Error; };

}  // namespace tokenham
