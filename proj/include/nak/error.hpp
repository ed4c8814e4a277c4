#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nak {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t offset, const std::string& what)
        : Error("parse error at byte " + std::to_string(offset) + ": " + what), offset_(offset), message_(what) {}
    std::size_t offset() const noexcept { return offset_; }
    const std::string& message() const noexcept { return message_; }

private:
    std::size_t offset_;
    std::string message_;
};

class ZeroDenominator : public ParseError {
public:
    explicit ZeroDenominator(std::size_t offset) : ParseError(offset, "zero denominator") {}
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

class NotSquare : public Error {
public:
    NotSquare() : Error("matrix is not square") {}
};

class Singular : public Error {
public:
    Singular() : Error("matrix is singular") {}
};

class SizeMismatch : public Error {
public:
    using Error::Error;
};

class GeneratorMismatch : public Error {
public:
    GeneratorMismatch() : Error("polynomials live in free algebras with different generator counts") {}
};

class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

class TruncationTooSmall : public Error {
public:
    using Error::Error;
};

class Diverged : public Error {
public:
    using Error::Error;
};

class DegreeExceedsTruncation : public Error {
public:
    DegreeExceedsTruncation(std::size_t degree, std::size_t limit)
        : Error("degree " + std::to_string(degree) + " exceeds trusted degree " + std::to_string(limit)) {}
};

class NotFrobenius : public Error {
public:
    using Error::Error;
};

class HilbertMismatch : public Error {
public:
    using Error::Error;
};

} // namespace nak
