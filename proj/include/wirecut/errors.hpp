#pragma once

#include <stdexcept>
#include <string>

namespace wirecut {

// Malformed input: bad shape, out-of-range index, non-positive threshold.
class argument_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Well-formed but unsatisfiable, e.g. a side budget below 3 per wire.
class infeasible_error : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// The requested enumeration exceeds the configured work limit.
class resource_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace wirecut
