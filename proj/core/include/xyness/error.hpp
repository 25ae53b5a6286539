// error.hpp: Exception types shared by all xyness modules

#pragma once

#include <stdexcept>
#include <string>

namespace xyness {

// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A parameter or configuration invariant does not hold.
class ValidationError : public Error {
public:
    using Error::Error;
};

// A numerical procedure could not produce a trustworthy result
// (pairing failure, bilinear degeneracy, singular concatenation, ...).
class NumericalError : public Error {
public:
    using Error::Error;
};

// Reading or writing result files failed.
class IoError : public Error {
public:
    using Error::Error;
};

// Curve fitting received unusable data.
class FitError : public Error {
public:
    using Error::Error;
};

} // namespace xyness
