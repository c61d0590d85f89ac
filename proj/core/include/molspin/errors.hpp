#pragma once

#include <stdexcept>
#include <string>

namespace molspin {

/// Adiabatic tracking lost a state between two sweep points.
class TrackingError : public std::runtime_error {
public:
    TrackingError(const std::string& what) : std::runtime_error(what) {}
};

/// A 1D minimization bracket did not contain an interior minimum.
class BracketingError : public std::runtime_error {
public:
    BracketingError(const std::string& what) : std::runtime_error(what) {}
};

/// A requested state label does not exist in a track.
class LookupError : public std::runtime_error {
public:
    LookupError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace molspin
