#pragma once

#include <stdexcept>
#include <string>

namespace dcas {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Shape mismatch between matrix operands; message names both shapes.
struct DimensionError : Error {
    using Error::Error;
};

/// Unknown or colliding object/element name.
struct NameError : Error {
    using Error::Error;
};

/// Covering or batch invariant violated where an exception is required.
struct ValidationError : Error {
    using Error::Error;
};

/// Text-format parse failure; message carries the line number.
struct ParseError : Error {
    using Error::Error;
};

/// Binary state-file failure (bad magic, truncation, corrupt matrices).
struct FormatError : Error {
    using Error::Error;
};

/// Internal cross-check failure (NCS/ICS or NCX/ICX divergence).
struct TripwireError : Error {
    using Error::Error;
};

} // namespace dcas
