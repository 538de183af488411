#pragma once

#include <stdexcept>
#include <string>

namespace smoothdual {

// Raised when user-supplied data (inventory file, parameter file, flag value)
// fails validation. The CLI maps this to exit code 1.
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace smoothdual
