#ifndef MACKEY_ERRORS_HPP
#define MACKEY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mackey {

// Error categories map onto process exit codes: invalid input -> 2,
// verification failure -> 3, resource cap -> 4.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct InvalidInput : Error {
    using Error::Error;
};

struct VerificationFailure : Error {
    using Error::Error;
};

struct ResourceCap : Error {
    using Error::Error;
};

struct NotCartan : InvalidInput {
    using InvalidInput::InvalidInput;
};

struct IndexOutOfRange : InvalidInput {
    using InvalidInput::InvalidInput;
};

struct DatumMismatch : InvalidInput {
    using InvalidInput::InvalidInput;
};

struct ZeroScale : InvalidInput {
    using InvalidInput::InvalidInput;
};

struct NotDominant : InvalidInput {
    using InvalidInput::InvalidInput;
};

struct RadiusTooSmall : InvalidInput {
    using InvalidInput::InvalidInput;
};

struct NotDownwardClosed : InvalidInput {
    using InvalidInput::InvalidInput;
};

struct NotUnimodular : InvalidInput {
    using InvalidInput::InvalidInput;
};

struct ArithmeticOverflow : ResourceCap {
    using ResourceCap::ResourceCap;
};

struct OrderCapExceeded : ResourceCap {
    using ResourceCap::ResourceCap;
};

struct SearchCapExceeded : ResourceCap {
    using ResourceCap::ResourceCap;
};

struct QuadratureUnconverged : VerificationFailure {
    using VerificationFailure::VerificationFailure;
};

} // namespace mackey

#endif
