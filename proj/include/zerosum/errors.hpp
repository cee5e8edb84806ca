#pragma once

#include <stdexcept>
#include <string>

namespace zerosum {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidGroup : public Error {
public:
    using Error::Error;
};

/// Element arity or residue range does not fit the group.
class ArityMismatch : public Error {
public:
    using Error::Error;
};

/// The group is too large for an operation that walks all of its elements.
class CapExceeded : public Error {
public:
    using Error::Error;
};

class NotADivisor : public Error {
public:
    using Error::Error;
};

/// Brute-force oracle refused an input that is too long.
class GuardExceeded : public Error {
public:
    using Error::Error;
};

class UnsupportedShape : public Error {
public:
    using Error::Error;
};

class PreconditionViolation : public Error {
public:
    using Error::Error;
};

class ParameterOutOfRange : public Error {
public:
    using Error::Error;
};

/// Malformed JSON input.
class FormatError : public Error {
public:
    using Error::Error;
};

}  // namespace zerosum
