#pragma once

#include <stdexcept>
#include <string>

namespace dsp {

// Length mismatch between weights, root sets or blocks.
struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A value violates the domain of an operation: non-dominant weight,
// singular parameter, mixed half-integrality, and so on.
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Malformed textual or JSON input.
struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace dsp
