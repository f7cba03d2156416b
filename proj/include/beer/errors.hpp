#pragma once

#include <stdexcept>
#include <string>

namespace beer {

// Base class for all toolkit errors. Subclasses distinguish caller mistakes
// (bad dimensions, malformed files) from domain-level failures so the CLI can
// map them to distinct exit codes.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Mismatched vector/matrix dimensions.
class DimensionError : public Error {
public:
    explicit DimensionError(const std::string& what) : Error(what) {}
};

// Linear system has no unique solution.
class SingularMatrixError : public Error {
public:
    explicit SingularMatrixError(const std::string& what) : Error(what) {}
};

// Parity-check structure violates the single-error-correcting requirements.
class InvalidCodeError : public Error {
public:
    explicit InvalidCodeError(const std::string& what) : Error(what) {}
};

// Caller passed an out-of-range or inconsistent argument.
class ArgumentError : public Error {
public:
    explicit ArgumentError(const std::string& what) : Error(what) {}
};

// Malformed input file: bad JSON, wrong format tag, inconsistent sizes.
class FormatError : public Error {
public:
    explicit FormatError(const std::string& what) : Error(what) {}
};

// Post-correction observation cannot be attributed to a unique miscorrection.
class AmbiguousObservationError : public Error {
public:
    explicit AmbiguousObservationError(const std::string& what) : Error(what) {}
};

} // namespace beer
