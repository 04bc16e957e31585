#pragma once

#include <stdexcept>
#include <string>

namespace formacheck {

/// Malformed or rejected input: bad files, out-of-range indices, failed
/// structural validation, inconsistent arguments.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace formacheck
