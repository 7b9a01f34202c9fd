#pragma once

#include <stdexcept>

namespace mstk {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or invalid input values: unparsable text, non-finite
/// coordinates, self-loops, missing weights.
class InputError : public Error {
public:
    using Error::Error;
};

/// A parameter outside its documented range (snowflake alpha, ball radius,
/// sample counts, non-prime p).
class ParameterError : public Error {
public:
    using Error::Error;
};

/// Operands living in spaces of different dimension.
class DimensionMismatch : public InputError {
public:
    using InputError::InputError;
};

/// Evaluation outside a function's domain.
class DomainError : public InputError {
public:
    using InputError::InputError;
};

/// Sphere constructions where the through-plane is not unique (x = +-y).
class DegenerateConfiguration : public Error {
public:
    using Error::Error;
};

/// A series limit was requested where the series diverges.
class DivergenceError : public ParameterError {
public:
    using ParameterError::ParameterError;
};

/// Shortest-path query between vertices with no connecting path.
class DisconnectedGraph : public InputError {
public:
    using InputError::InputError;
};

}  // namespace mstk
