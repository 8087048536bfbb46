#pragma once

#include <span>
#include <vector>

#include "qms/density_matrix.hpp"
#include "qms/measurement.hpp"
#include "qms/probability.hpp"

namespace qms {

// Multi-index outcome distribution, one axis per party, row-major.
class JointDistribution {
public:
    JointDistribution(std::vector<int> shape, std::vector<double> probs, double tol = kValidationTol);

    std::span<const int> shape() const { return shape_; }
    int parties() const { return static_cast<int>(shape_.size()); }
    std::size_t size() const { return p_.size(); }
    double operator[](std::size_t flat) const { return p_[flat]; }
    double at(std::span<const int> idx) const;
    std::span<const double> probabilities() const { return p_; }

    // Sum over all parties except `party`.
    std::vector<double> marginal(int party) const;
    // Bipartite helpers: B-row given A outcome, and vice versa.
    std::vector<double> row(int a_outcome) const;
    std::vector<double> column(int b_outcome) const;

private:
    std::vector<int> shape_;
    std::vector<double> p_;
};

// Unnormalized conditional states of B given outcomes of a measurement on A.
// Members are positive semidefinite and their traces sum to 1.
class Assemblage {
public:
    explicit Assemblage(std::vector<ComplexMatrix> members, double tol = kValidationTol);

    int outcomes() const { return static_cast<int>(members_.size()); }
    const ComplexMatrix& member(int i) const { return members_[i]; }
    double member_trace(int i) const { return members_[i].trace().real(); }
    ComplexMatrix sum() const;

private:
    std::vector<ComplexMatrix> members_;
};

// Born rule: component i = Tr(Pi_i rho).
ProbabilityVector born_probabilities(const DensityMatrix& state, const ProjectiveMeasurement& meas);

// P(i,j,...) = Tr[(Pi_i x Pi_j x ...) rho], one measurement per party.
JointDistribution joint_distribution(const DensityMatrix& state,
                                     std::span<const ProjectiveMeasurement> meas_per_party);

// sigma_{i|x} = Tr_A[(Pi_i x 1) rho] for a bipartite state.
Assemblage assemblage(const DensityMatrix& state, const ProjectiveMeasurement& meas_on_a);

// <L_1 x L_2 x ...> using the measurements' outcome labels.
double expectation(const DensityMatrix& state, std::span<const ProjectiveMeasurement> meas_per_party);

}  // namespace qms
