#pragma once

#include <stdexcept>
#include <string>

namespace wpsing {

// Bad input values (CLI exit code 2).
struct argument_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Data that violates an integrality or positivity guarantee (CLI exit code 3).
struct consistency_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Operation invoked on an object in the wrong state.
struct state_error : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace wpsing
