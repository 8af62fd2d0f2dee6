#pragma once

#include <stdexcept>
#include <string>

namespace reduxwords {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An operation was called outside its domain (empty word, index 0, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A morphism, Toeplitz filler or sequence spec file is malformed.
class ConfigurationError : public Error {
public:
    using Error::Error;
};

/// A prefix request exceeded the materialization cap of a sequence handle.
class CapacityError : public Error {
public:
    CapacityError(std::size_t requested, std::size_t cap)
        : Error("prefix of length " + std::to_string(requested) +
                " exceeds materialization cap " + std::to_string(cap)),
          requested_(requested), cap_(cap) {}

    std::size_t requested() const noexcept { return requested_; }
    std::size_t cap() const noexcept { return cap_; }

private:
    std::size_t requested_;
    std::size_t cap_;
};

/// Lookup of a claim id that is not in the registry.
class UnknownClaimError : public Error {
public:
    explicit UnknownClaimError(const std::string& id)
        : Error("unknown claim id: " + id) {}
};

}  // namespace reduxwords
