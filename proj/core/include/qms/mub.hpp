#pragma once

#include <vector>

#include "qms/measurement.hpp"

namespace qms {

// Complete sets of mutually unbiased bases as projective measurements:
// dim 2 -> sigma_x, sigma_y, sigma_z; dim 3 -> the computational basis plus
// three phase bases built from omega = 2*pi/3.
std::vector<ProjectiveMeasurement> mub_family(int dim);

}  // namespace qms
