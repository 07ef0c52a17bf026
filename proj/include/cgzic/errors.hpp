#pragma once

#include <stdexcept>
#include <string>

namespace cgzic {

// Argument outside the domain of a capacity function (negative or non-finite).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Channel parameters violate a ChannelConfig / GeneralChannel invariant.
class InvalidChannel : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A regime-specific formula was requested outside its regime.
class RegimeError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Requested work exceeds a configured cap (e.g. grid cell count).
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace cgzic
