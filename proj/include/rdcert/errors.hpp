#pragma once

#include <stdexcept>

namespace rdcert {

/// Input exceeds a configured resource cap (modulus, group order, series length, ...).
struct SizeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A character table could not be completed or failed its certification gates.
struct TableError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed textual input (field specs, generator cycles, flag values).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace rdcert
