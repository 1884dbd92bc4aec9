#ifndef PERSPECTRA_ERRORS_HPP
#define PERSPECTRA_ERRORS_HPP

#include <stdexcept>

namespace perspectra {

/// Thrown when an instance exceeds a size guard (engine caps, brute-force
/// limits, enumeration bounds). The CLI maps this to its own exit code.
struct CapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace perspectra

#endif
