/**
 * Exception types shared across the library.
 */

#ifndef HDX_ERRORS_HPP
#define HDX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hdx {

/** Base class for all errors raised by the library. */
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidFacet : Error {
    using Error::Error;
};

struct DegreeOutOfRange : Error {
    using Error::Error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct NotSymmetric : Error {
    using Error::Error;
};

struct NegativeSpectrum : Error {
    using Error::Error;
};

struct ZeroVector : Error {
    using Error::Error;
};

struct UnknownGenerator : Error {
    using Error::Error;
};

struct InvalidPermutation : Error {
    using Error::Error;
};

struct NotSimplicial : Error {
    using Error::Error;
};

struct EmptyFamily : Error {
    using Error::Error;
};

struct InvalidParameter : Error {
    using Error::Error;
};

} // namespace hdx

#endif // HDX_ERRORS_HPP
