#pragma once

#include <stdexcept>
#include <string>

namespace modelatom {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A parameter lies outside the domain where the model is defined.
class DomainError : public Error {
public:
    using Error::Error;
};

/// The drive makes Ω²(t) nonpositive somewhere: the excluded
/// "ionization-like" regime.
class IonizationRegime : public DomainError {
public:
    using DomainError::DomainError;
};

/// Numerical integration did not converge or produced an unphysical state.
class IntegrationFailure : public Error {
public:
    using Error::Error;
};

}  // namespace modelatom
