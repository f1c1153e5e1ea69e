#pragma once

#include <stdexcept>
#include <string>

namespace regionzeta {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad user input: unparseable files, invalid names, malformed data.
struct InputError : Error {
    using Error::Error;
};

// A resource guard tripped; the computation was refused, not attempted.
struct GuardExceeded : Error {
    using Error::Error;
};

struct ZeroVector final : InputError {
    ZeroVector() : InputError("zero vector cannot define a hyperplane") {}
};

struct MixedField final : InputError {
    explicit MixedField(const std::string& what) : InputError(what) {}
};

struct UnsupportedType final : InputError {
    explicit UnsupportedType(const std::string& what) : InputError(what) {}
};

struct ParseError final : InputError {
    explicit ParseError(const std::string& what) : InputError(what) {}
};

struct FlatNotInLattice final : InputError {
    explicit FlatNotInLattice(const std::string& what) : InputError(what) {}
};

struct BaseNotAChamber final : InputError {
    explicit BaseNotAChamber(const std::string& what) : InputError(what) {}
};

struct CodeInvalid final : InputError {
    explicit CodeInvalid(const std::string& what) : InputError(what) {}
};

struct PresetTypeMismatch final : InputError {
    explicit PresetTypeMismatch(const std::string& what) : InputError(what) {}
};

struct NotIntegerSplit final : Error {
    explicit NotIntegerSplit(const std::string& what) : Error(what) {}
};

struct LatticeTooLarge final : GuardExceeded {
    explicit LatticeTooLarge(const std::string& what) : GuardExceeded(what) {}
};

struct GroupTooLarge final : GuardExceeded {
    explicit GroupTooLarge(const std::string& what) : GuardExceeded(what) {}
};

struct TooManyChambers final : GuardExceeded {
    explicit TooManyChambers(const std::string& what) : GuardExceeded(what) {}
};

struct TooManyCodes final : GuardExceeded {
    explicit TooManyCodes(const std::string& what) : GuardExceeded(what) {}
};

} // namespace regionzeta
