#pragma once

#include <stdexcept>
#include <string>

namespace mpa {

/// Base class for every error raised by the kernel.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input violates a documented precondition (mismatched k or lambda, wrong basis tag, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Diagram data that does not describe a valid diagram (weight mismatch, bad vertex).
class MalformedDiagram : public Error {
public:
    using Error::Error;
};

/// Oracle data that cannot be used, e.g. duplicate abscissae in interpolation.
class MalformedOracleData : public Error {
public:
    using Error::Error;
};

/// A computation would exceed a configured size cap.
class ResourceError : public Error {
public:
    using Error::Error;
};

/// Serialized input could not be decoded; `field()` names the offending JSON path.
class ParseError : public Error {
public:
    ParseError(std::string field, const std::string& what)
        : Error(field + ": " + what), field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

}  // namespace mpa
