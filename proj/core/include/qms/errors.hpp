#pragma once

#include <stdexcept>
#include <string>

namespace qms {

// Thrown when an exact enumeration would exceed its hard size cap.
class SizeLimitError : public std::runtime_error {
public:
    explicit SizeLimitError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a precondition checked empirically (e.g. monotonicity of a
// state family) turns out not to hold.
class AssumptionError : public std::runtime_error {
public:
    explicit AssumptionError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qms
