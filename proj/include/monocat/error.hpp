#pragma once

#include <stdexcept>
#include <string>

namespace monocat {

/// Base class for every failure raised by the library. Each subclass names a
/// violated precondition; the CLI maps all of them to exit code 2 except
/// InternalError, which maps to 1.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class ModulusMismatch : public Error {
public:
    using Error::Error;
};

class ContextMismatch : public Error {
public:
    using Error::Error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

class NotLinear : public Error {
public:
    using Error::Error;
};

class MonoViolation : public Error {
public:
    using Error::Error;
};

class EpiViolation : public Error {
public:
    using Error::Error;
};

class KindMismatch : public Error {
public:
    using Error::Error;
};

class CompatibilityViolation : public Error {
public:
    using Error::Error;
};

// Internal consistency check failed (a constructed object did not satisfy its
// defining property). Indicates a bug, never bad input.
class InternalError : public Error {
public:
    using Error::Error;
};

} // namespace monocat
