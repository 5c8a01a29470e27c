#pragma once

#include <stdexcept>
#include <string>

namespace qtkern {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class MalformedInput : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

/// A denominator vanished under a substitution. `where` names the offending
/// assignment or point so callers can report it.
class PoleError : public Error {
public:
    explicit PoleError(std::string where)
        : Error("pole at " + where), where_(std::move(where)) {}
    const std::string& where() const noexcept { return where_; }

private:
    std::string where_;
};

class EmptyWindow : public Error {
public:
    using Error::Error;
};

class NonSimplePole : public Error {
public:
    using Error::Error;
};

/// A requested size exceeds the configured bounds.
class ResourceLimit : public Error {
public:
    using Error::Error;
};

class InternalConsistency : public Error {
public:
    using Error::Error;
};

}  // namespace qtkern
