#pragma once

#include <stdexcept>
#include <string>

namespace gsatlas {

// Raised when two independently computed quantities that must agree do not
// (bound inversion, exactness-shortcut clash, non-flat oracle spectrum).
// Distinct from std::invalid_argument so callers can map it to a dedicated
// exit status.
class ConsistencyError : public std::runtime_error {
 public:
  explicit ConsistencyError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gsatlas
