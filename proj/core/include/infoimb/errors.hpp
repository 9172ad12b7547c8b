#pragma once

#include <stdexcept>
#include <string>

namespace infoimb {

/// Input or contract violation: malformed CSV cells, calendar mismatches,
/// empty date intersections. The CLI maps these to exit code 3.
class data_error : public std::runtime_error {
 public:
  explicit data_error(const std::string& what) : std::runtime_error(what) {}
};

/// Numerical failure: factorization breakdown after jitter escalation,
/// degenerate optimization domains. The CLI maps these to exit code 4.
class numeric_error : public std::runtime_error {
 public:
  explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace infoimb
