#pragma once

#include <stdexcept>
#include <string>

namespace lineadm {

// Bad user-supplied data (files, JSON, CLI arguments). Maps to exit code 2.
class input_error : public std::runtime_error {
 public:
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// A guaranteed invariant failed, e.g. a certifier produced a vector that
// does not verify. Indicates a defect, not bad input. Maps to exit code 3.
class internal_error : public std::logic_error {
 public:
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace lineadm
