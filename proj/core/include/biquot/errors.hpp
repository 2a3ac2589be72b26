#pragma once

#include <stdexcept>
#include <string>

namespace biquot {

// Malformed or out-of-contract input (CLI exit status 2).
class InvalidInput : public std::invalid_argument {
public:
    explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

// Valid input for which the requested construction degenerates, e.g. a zero
// discriminant or a positive-dimensional solution set.
class DegenerateInput : public std::domain_error {
public:
    explicit DegenerateInput(const std::string& what) : std::domain_error(what) {}
};

} // namespace biquot
