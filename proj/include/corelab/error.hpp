#pragma once

#include <stdexcept>
#include <string>

namespace corelab {

/// Base of every error the library raises.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument violates an operation's precondition.
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// An enumeration produced more objects than its configured cap.
class Overflow : public Error {
public:
    using Error::Error;
};

/// The oracle's output kept changing as the chain-length cap grew.
class CapInstability : public Error {
public:
    using Error::Error;
};

/// A per-cell time budget ran out.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

/// A construction reached a state its theory rules out.
class InternalError : public Error {
public:
    using Error::Error;
};

} // namespace corelab
