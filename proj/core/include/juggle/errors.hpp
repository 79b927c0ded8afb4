#pragma once

#include <stdexcept>
#include <string>

namespace juggle {

// Thrown when an enumeration request exceeds the configured desk-scale
// bounds. Callers may retry with explicit, larger limits.
class feasibility_error : public std::runtime_error {
public:
    explicit feasibility_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when arithmetic that must be exact (integer division inside the
// characteristic polynomial, division of minimal-period counts by the
// period) leaves a remainder. Always indicates a bug, never bad input.
class exactness_error : public std::logic_error {
public:
    explicit exactness_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace juggle
