#pragma once

#include <stdexcept>
#include <string>

namespace lmg {

/// Thrown when an iterative numerical procedure fails to converge
/// within its budget. Domain/precondition violations use
/// std::invalid_argument instead.
class numerical_error : public std::runtime_error {
public:
    explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace lmg
