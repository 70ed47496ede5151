#pragma once

#include <stdexcept>
#include <string>

namespace entrate {

// Complex evaluation hit a vanishing denominator or normalizer.
class SingularEvaluation : public std::runtime_error {
public:
    explicit SingularEvaluation(const std::string& what) : std::runtime_error(what) {}
};

// Quadrature or regression failed to converge to the requested tolerance.
class NumericalFailure : public std::runtime_error {
public:
    explicit NumericalFailure(const std::string& what) : std::runtime_error(what) {}
};

// Malformed model file or inconsistent run configuration.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace entrate
