#pragma once

#include <stdexcept>
#include <string>

namespace binlcl {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input (bad problem string, bad tree file, ...). CLI exit code 2.
struct InputError : Error {
    using Error::Error;
};

// A stated expectation did not hold (e.g. --expect-solvable). CLI exit code 3.
struct ExpectationError : Error {
    using Error::Error;
};

// A configured resource cap was exceeded. CLI exit code 4.
struct CapError : Error {
    using Error::Error;
};

} // namespace binlcl
