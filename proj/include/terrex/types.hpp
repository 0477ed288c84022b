#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace terrex {

using VertexId = std::uint32_t;

inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

// Closed vertical interval of admissible heights for one vertex.
struct HeightInterval {
    double lo = 0.0;
    double hi = 0.0;
};

// Base error for everything this library throws.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Malformed inputs (files, instances, preconditions). CLI exit code 1.
class InputError : public Error {
  public:
    using Error::Error;
};

// A search ran out of its node budget where an exact answer was required.
// CLI exit code 2.
class BudgetError : public Error {
  public:
    using Error::Error;
};

}  // namespace terrex
