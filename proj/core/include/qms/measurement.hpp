#pragma once

#include <array>
#include <span>
#include <vector>

#include "qms/complex_matrix.hpp"
#include "qms/tolerances.hpp"

namespace qms {

// Non-degenerate projective measurement: rank-1 orthogonal projectors summing
// to the identity, with real outcome labels in descending order.  Outcome
// index 0 carries the largest label (for qubits, index 0 <-> +1).
class ProjectiveMeasurement {
public:
    ProjectiveMeasurement(std::vector<ComplexMatrix> projectors, std::vector<double> labels,
                          double tol = kValidationTol);

    // Diagonalizes a Hermitian observable; degenerate spectra are rejected
    // since the outcome labels would be ambiguous.
    static ProjectiveMeasurement from_observable(const ComplexMatrix& observable,
                                                 double tol = kValidationTol);

    // Orthonormal basis vectors, one projector per vector.
    static ProjectiveMeasurement from_basis(const std::vector<std::vector<cdouble>>& vectors,
                                            std::vector<double> labels, double tol = kValidationTol);

    int dim() const { return dim_; }
    int outcomes() const { return static_cast<int>(projectors_.size()); }
    const ComplexMatrix& projector(int i) const { return projectors_[i]; }
    std::span<const double> labels() const { return labels_; }

    // Entrywise complex conjugate of every projector (itself a valid
    // measurement; pairs a basis with its conjugate partner).
    ProjectiveMeasurement conjugated() const;

private:
    int dim_ = 0;
    std::vector<ComplexMatrix> projectors_;
    std::vector<double> labels_;
};

// Qubit measurement along a unit Bloch vector: projectors (1 +- n.sigma)/2
// with labels +1/-1.
ProjectiveMeasurement bloch_measurement(const std::array<double, 3>& direction,
                                        double tol = kValidationTol);

// Bloch vector of the +1 projector of a qubit measurement.
std::array<double, 3> bloch_direction(const ProjectiveMeasurement& meas);

}  // namespace qms
