#pragma once

#include <span>
#include <vector>

#include "qms/tolerances.hpp"

namespace qms {

// Vector of non-negative weights with a declared total.  Normalized
// distributions carry total 1; unnormalized rows q(y; x_i) carry their own.
class ProbabilityVector {
public:
    ProbabilityVector(std::vector<double> components, double total, double tol = kValidationTol);

    static ProbabilityVector normalized(std::vector<double> components, double tol = kValidationTol);

    std::size_t size() const { return c_.size(); }
    double operator[](std::size_t i) const { return c_[i]; }
    std::span<const double> components() const { return c_; }
    double total() const { return total_; }

private:
    std::vector<double> c_;
    double total_ = 0.0;
};

}  // namespace qms
