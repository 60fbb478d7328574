#pragma once

#include <stdexcept>

namespace odsq {

// Domain violations use std::domain_error, integer-width overflow uses
// std::overflow_error and bad user input uses std::invalid_argument.
// Requests that would exceed a configured memory or size budget throw this.
class resource_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace odsq
