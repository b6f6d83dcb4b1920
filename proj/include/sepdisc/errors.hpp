#pragma once

#include <stdexcept>

namespace sepdisc {

// Bad or degenerate input: unparsable file, vertical line, general-position
// violation, precondition failure. CLI maps this to exit code 2.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A theorem-level invariant failed on a concrete instance. Never swallowed;
// CLI maps this to exit code 1 and prints the certificate.
struct InvariantViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace sepdisc
