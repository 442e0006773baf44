#pragma once

#include <stdexcept>
#include <string>

namespace orthoconn {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the documented domain (k > n, malformed rational, ...).
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// A series was asked to terminate but has no nonpositive-integer numerator.
class NonTerminating : public Error {
public:
    using Error::Error;
};

/// A denominator parameter vanishes inside the summation range.
class DenominatorPole : public Error {
public:
    using Error::Error;
};

class ZeroDenominatorParameter : public Error {
public:
    using Error::Error;
};

/// A Pochhammer divisor in an expansion formula vanishes on a touched index.
class PoleInParams : public Error {
public:
    using Error::Error;
};

class UnsupportedPair : public Error {
public:
    using Error::Error;
};

}  // namespace orthoconn
