#pragma once

#include <stdexcept>
#include <string>

namespace cvens {

// Bad input from the user: malformed files, mismatched ids, invalid config.
// The CLI maps this to exit code 2; anything else that escapes is exit 1.
class UserError : public std::runtime_error {
public:
    explicit UserError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cvens
