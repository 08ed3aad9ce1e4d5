#pragma once

#include <stdexcept>
#include <string>

namespace altwqo {

/// Base class for all library errors. Verdicts ("no embedding", "not a
/// series-parallel triple") are returned as values, never thrown; exceptions
/// are reserved for inputs or states that make the question itself ill-posed.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed object: dangling ids, non-path thread, disconnected input where
/// connectivity is required, and similar.
struct StructuralError : Error {
    using Error::Error;
};

/// Arguments outside an operation's domain (s == t, foreign qo element, ...).
struct DomainError : Error {
    using Error::Error;
};

/// A documented precondition does not hold (input is of the wrong shape for
/// the question asked). Distinct from a `false` verdict.
struct PreconditionError : Error {
    using Error::Error;
};

/// Exact search refused because the instance exceeds the configured size
/// guard. Never a wrong verdict.
struct ResourceError : Error {
    using Error::Error;
};

/// A state the surrounding theory guarantees impossible. Surfaced loudly.
struct InternalError : Error {
    using Error::Error;
};

} // namespace altwqo
