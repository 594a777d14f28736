#ifndef TOROIDAL_ERRORS_HPP
#define TOROIDAL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace toroidal {

// Base for every error raised on invalid input. The CLI maps these to exit
// code 2; mathematical property failures are reported, never thrown.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class NotInLatticeError : public Error {
public:
    using Error::Error;
};

class DegenerateError : public Error {
public:
    using Error::Error;
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

class UnknownNameError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace toroidal

#endif
