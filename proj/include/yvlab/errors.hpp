#pragma once

#include <stdexcept>
#include <string>

namespace yvlab {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A division that was required to be exact left a nonzero remainder.
class NonExactDivision : public Error {
public:
    using Error::Error;
};

/// A rational coefficient has a denominator divisible by the reduction prime.
class NotPIntegral : public Error {
public:
    using Error::Error;
};

class ZeroDenominator : public Error {
public:
    using Error::Error;
};

class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

/// Two constructions of the same object disagreed.
class InternalMismatch : public Error {
public:
    using Error::Error;
};

/// mu_n * tau_n produced a non-integral coefficient.
class NonIntegralResult : public Error {
public:
    using Error::Error;
};

/// A closed-form coefficient formula produced a non-integral value.
class NonIntegralFormulaValue : public Error {
public:
    using Error::Error;
};

class NotPrime : public Error {
public:
    using Error::Error;
};

class PrimeTooSmall : public Error {
public:
    using Error::Error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

}  // namespace yvlab
