#include "qms/probability.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qms {

ProbabilityVector::ProbabilityVector(std::vector<double> components, double total, double tol)
    : c_(std::move(components)), total_(total) {
    double sum = 0.0;
    for (const double x : c_) {
        if (x < -tol) {
            std::ostringstream msg;
            msg << "ProbabilityVector: negative component " << x;
            throw std::invalid_argument(msg.str());
        }
        sum += x;
    }
    if (std::abs(sum - total_) > tol * std::max(1.0, std::abs(total_))) {
        std::ostringstream msg;
        msg << "ProbabilityVector: components sum to " << sum << ", declared total " << total_;
        throw std::invalid_argument(msg.str());
    }
}

ProbabilityVector ProbabilityVector::normalized(std::vector<double> components, double tol) {
    return ProbabilityVector(std::move(components), 1.0, tol);
}

}  // namespace qms
