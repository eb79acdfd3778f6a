#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rcnn {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Precondition violations on parameters (bad radius, sigma <= 0, ...).
class InvalidParameter : public Error {
public:
    using Error::Error;
};

/// Shape mismatches between grids, kernels and masks.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// Input data that carries no usable signal (constant image, single-level
/// histogram, all-zero pulse).
class DegenerateInput : public Error {
public:
    using Error::Error;
};

/// Non-finite intermediate values.
class NumericError : public Error {
public:
    using Error::Error;
};

/// Histogram fit did not converge or produced an unusable optimum.
class FitFailure : public Error {
public:
    using Error::Error;
};

/// Malformed input file. `position` is a byte offset for binary formats and a
/// 1-based line number for line-oriented ones.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, size_t position)
        : Error(msg + " (at " + std::to_string(position) + ")"), position(position) {}
    size_t position;
};

class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace rcnn
