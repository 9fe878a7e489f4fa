#pragma once

#include <stdexcept>
#include <string>

namespace valfield {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

class FieldMismatch : public Error {
public:
    FieldMismatch() : Error("operands belong to different fields") {}
};

class InvalidField : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class SingularMatrix : public Error {
public:
    SingularMatrix() : Error("matrix is singular") {}
};

class NonSquare : public Error {
public:
    NonSquare() : Error("matrix is not square") {}
};

class ZeroPolynomial : public Error {
public:
    ZeroPolynomial() : Error("zero polynomial has no Newton polygon") {}
};

class EmptyPolyhedron : public Error {
public:
    EmptyPolyhedron() : Error("polyhedron is empty") {}
};

class InvalidBounds : public Error {
public:
    using Error::Error;
};

class InconsistentEqualities : public Error {
public:
    InconsistentEqualities() : Error("equality system has no solution") {}
};

class SizeTooLarge : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace valfield
