#pragma once

#include <stdexcept>
#include <string>

namespace qnil {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad algebra parameters, or quaternions from different algebras mixed.
class ParameterError : public Error {
public:
    using Error::Error;
};

class NonDivisionAlgebra : public ParameterError {
public:
    using ParameterError::ParameterError;
};

class DivisionByZero : public Error {
public:
    using Error::Error;
};

class DimensionError : public Error {
public:
    using Error::Error;
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

// A requested witness does not exist (e.g. conjugator of non-conjugate elements).
class ObstructionError : public Error {
public:
    using Error::Error;
};

// A bounded search ran out of budget although a solution is known to exist.
class BudgetExhausted : public Error {
public:
    using Error::Error;
};

// A certificate failed exact verification. Always a bug.
class VerificationFailure : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace qnil
