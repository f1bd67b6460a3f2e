#pragma once

#include <stdexcept>
#include <string>

namespace coursenet {

// Problems with input data or configuration (bad CSV, missing file, bad flag
// value). The CLI maps these to exit code 1.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// Failures while computing on otherwise well-formed input (undefined metric,
// degenerate graph). The CLI maps these to exit code 2.
class ComputeError : public std::runtime_error {
public:
    explicit ComputeError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace coursenet
