#pragma once

#include <stdexcept>
#include <string>

namespace usaug {

// Error categories map onto the CLI exit codes: ConfigError -> 1,
// DataError -> 2, ProcessingError -> 3.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ProcessingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : DataError {
    using DataError::DataError;
};

struct NonBinaryMask : DataError {
    using DataError::DataError;
};

struct NonFiniteIntensity : DataError {
    using DataError::DataError;
};

struct EmptyMask : ProcessingError {
    using ProcessingError::ProcessingError;
};

struct InvalidKernel : ProcessingError {
    using ProcessingError::ProcessingError;
};

struct DegenerateImage : ProcessingError {
    using ProcessingError::ProcessingError;
};

}  // namespace usaug
