#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace permstat {

// Base of every error the library raises. Callers that only need a message
// can catch this; the CLI maps subclasses onto exit codes.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DuplicateLetter : public Error {
public:
    explicit DuplicateLetter(std::uint32_t letter)
        : Error("duplicate letter " + std::to_string(letter)), letter_(letter) {}
    std::uint32_t letter() const noexcept { return letter_; }

private:
    std::uint32_t letter_;
};

class InvalidLetter : public Error {
public:
    using Error::Error;
};

class NotAPermutation : public Error {
public:
    using Error::Error;
};

class KOutOfRange : public Error {
public:
    using Error::Error;
};

class EmptyWord : public Error {
public:
    using Error::Error;
};

class InvalidR : public Error {
public:
    using Error::Error;
};

class UnknownStatistic : public Error {
public:
    using Error::Error;
};

class WordNotPermutation : public Error {
public:
    using Error::Error;
};

class LetterCollision : public Error {
public:
    using Error::Error;
};

// Raised when an internal consistency check fails. Never expected in
// practice; it marks a defect rather than bad input.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

class SizeCapExceeded : public Error {
public:
    using Error::Error;
};

class ArityMismatch : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace permstat
