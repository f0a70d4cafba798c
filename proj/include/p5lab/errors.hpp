#pragma once

#include <stdexcept>
#include <string>

namespace p5lab {

// Bad caller input: violated preconditions, unparsable flags. CLI exit code 2.
class ArgumentError : public std::runtime_error {
public:
    explicit ArgumentError(const std::string& what) : std::runtime_error(what) {}
};

// Request is well-formed but beyond a size cap of this desk-scale tool. CLI exit code 3.
class CapabilityError : public std::runtime_error {
public:
    explicit CapabilityError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input text; byte_offset points at the offending byte.
class ParseError : public ArgumentError {
public:
    ParseError(const std::string& what, std::size_t byte_offset)
        : ArgumentError(what + " (byte " + std::to_string(byte_offset) + ")"),
          byte_offset(byte_offset) {}
    std::size_t byte_offset;
};

// A theorem-backed runtime check failed. Either the input lied about its class
// (e.g. claimed P5-free) or there is a bug; the message carries the witness.
class InvariantViolation : public std::runtime_error {
public:
    explicit InvariantViolation(const std::string& what) : std::runtime_error(what) {}
};

class OperationCancelled : public std::runtime_error {
public:
    OperationCancelled() : std::runtime_error("operation cancelled") {}
};

}  // namespace p5lab
