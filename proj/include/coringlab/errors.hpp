#pragma once

#include <stdexcept>
#include <string>

namespace coringlab {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Arithmetic on scalars drawn from two different field specs.
struct MixedFieldError : Error {
    using Error::Error;
};

struct NonPrimeCharacteristicError : Error {
    using Error::Error;
};

struct NotAComplexError : Error {
    using Error::Error;
};

struct NotConnectedError : Error {
    using Error::Error;
};

struct NotAugmentedError : Error {
    using Error::Error;
};

struct NonMonomialRelationError : Error {
    using Error::Error;
};

struct RelationInconsistencyError : Error {
    using Error::Error;
};

struct InfiniteDimensionalError : Error {
    using Error::Error;
};

struct BaseMismatchError : Error {
    using Error::Error;
};

struct NotDescendableError : Error {
    using Error::Error;
};

struct NotNilpotentError : Error {
    using Error::Error;
};

struct ZeroPointError : Error {
    using Error::Error;
};

struct NotAComonadError : Error {
    using Error::Error;
};

struct UnsupportedError : Error {
    using Error::Error;
};

// Parse failure with byte offset into the presentation string.
struct ParseError : Error {
    ParseError(std::size_t position, const std::string& expected, const std::string& text)
        : Error("parse error at position " + std::to_string(position) + ": expected " + expected),
          pos(position),
          expected_tokens(expected),
          input(text) {}
    std::size_t pos;
    std::string expected_tokens;
    std::string input;
};

// Schema violation with a JSON pointer to the offending location.
struct SchemaError : Error {
    SchemaError(const std::string& pointer, const std::string& what_failed)
        : Error("schema error at " + pointer + ": " + what_failed), json_pointer(pointer) {}
    std::string json_pointer;
};

}  // namespace coringlab
