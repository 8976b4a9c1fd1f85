#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace tlau {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ShapeMismatch : public Error {
public:
    using Error::Error;
};

class AssociativityViolation : public Error {
public:
    AssociativityViolation(std::array<std::size_t, 4> witness);
    std::array<std::size_t, 4> witness;
};

class HomomorphismViolation : public Error {
public:
    HomomorphismViolation(std::size_t i, std::size_t j);
    std::size_t i, j;
};

class AxiomViolation : public Error {
public:
    using Error::Error;
};

class ComplexBroken : public Error {
public:
    ComplexBroken(std::size_t degree, std::size_t row, std::size_t col);
    std::size_t degree, row, col;
};

class SizeCap : public Error {
public:
    using Error::Error;
};

class CertificateInvalid : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class ValidationError : public Error {
public:
    using Error::Error;
};

} // namespace tlau
