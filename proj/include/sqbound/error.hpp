#pragma once

#include <stdexcept>
#include <string>

namespace sqbound {

// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A precondition on an argument was violated (out-of-range vertex, k < 2, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

// The operation needs a connected graph; the diameter is infinite.
class DisconnectedGraph : public Error {
public:
    DisconnectedGraph() : Error("graph is disconnected (infinite diameter)") {}
    explicit DisconnectedGraph(const std::string& what) : Error(what) {}
};

// Malformed graph6 / edge-list / family-spec text.
class ParseError : public Error {
public:
    using Error::Error;
};

// Both the iterative solver and the dense fallback failed.
class NumericalFailure : public Error {
public:
    using Error::Error;
};

}  // namespace sqbound
