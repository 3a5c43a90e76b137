#pragma once

#include <stdexcept>
#include <string>

namespace undecim {

// Violated internal invariant: a state the library's own reasoning rules out.
// Distinct from std::domain_error, which reports bad caller input.
class internal_error : public std::logic_error {
 public:
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace undecim
