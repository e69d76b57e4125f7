#pragma once

#include <stdexcept>
#include <string>

namespace ansec {

// Requested operating point admits no positive secrecy capacity (or a
// constraint cannot be met for any threshold in the search bracket).
class infeasible_error : public std::runtime_error {
public:
    explicit infeasible_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Inputs are valid but outside what this implementation computes exactly;
// the message names the alternative to use.
class capability_error : public std::runtime_error {
public:
    explicit capability_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace ansec
