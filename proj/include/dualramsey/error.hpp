#pragma once

#include <stdexcept>
#include <string>

namespace dualramsey {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A label, pair or subset does not belong to the object it is used with.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Two label sets that must be disjoint share an element.
class DisjointnessError : public Error {
public:
    using Error::Error;
};

/// An operation was called outside of its documented precondition.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A value violates the invariant of the type being constructed.
class InvalidObject : public Error {
public:
    using Error::Error;
};

/// A configured size guard would be exceeded.
class GuardExceeded : public Error {
public:
    using Error::Error;
};

/// A postcondition that the mathematics guarantees did not hold. Seeing one is a bug.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

} // namespace dualramsey
