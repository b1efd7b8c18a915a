#pragma once

#include <stdexcept>
#include <string>

namespace arseg {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnreadableFile : Error {
    using Error::Error;
};

struct MalformedHeader : Error {
    using Error::Error;
};

struct UnsupportedFormat : Error {
    using Error::Error;
};

struct BandOutOfBounds : Error {
    using Error::Error;
};

struct EmptyLine : Error {
    using Error::Error;
};

struct EmptyWord : Error {
    using Error::Error;
};

struct SpecDoesNotFit : Error {
    using Error::Error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

} // namespace arseg
