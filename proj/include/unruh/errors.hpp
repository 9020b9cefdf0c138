#pragma once

#include <stdexcept>
#include <string>

namespace unruh {

// Raised when a correlator is evaluated on the light cone (z = 0).
class SingularityError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Raised by the quadrature oracle when the eps -> 0 extrapolation does not
// settle below the requested tolerance. `diagnostics` holds a readable dump
// of the per-epsilon values.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, std::string diagnostics)
        : std::runtime_error(what), diagnostics_(std::move(diagnostics)) {}

    const std::string& diagnostics() const noexcept { return diagnostics_; }

private:
    std::string diagnostics_;
};

} // namespace unruh
