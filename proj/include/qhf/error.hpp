#pragma once

#include <stdexcept>
#include <string>

namespace qhf {

/// Malformed data: empty or mis-sized grids, shape mismatches.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A parameter outside its documented domain (negative scale, threshold > 1, ...).
class InvalidParameter : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An operation refused because the request exceeds a hard guard.
class Refused : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raster decode/encode failure.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace qhf
