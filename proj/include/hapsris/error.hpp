#pragma once

#include <stdexcept>
#include <string>

namespace hapsris {

/// Invalid or inconsistent configuration (bad values, unknown keys, syntax).
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Degenerate geometry, e.g. coincident endpoints.
class GeometryError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace hapsris
