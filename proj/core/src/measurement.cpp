#include "qms/measurement.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "qms/hermitian_eigen.hpp"

namespace qms {

ProjectiveMeasurement::ProjectiveMeasurement(std::vector<ComplexMatrix> projectors,
                                             std::vector<double> labels, double tol)
    : projectors_(std::move(projectors)), labels_(std::move(labels)) {
    if (projectors_.empty()) throw std::invalid_argument("ProjectiveMeasurement: no projectors");
    dim_ = projectors_[0].dim();
    if (static_cast<int>(projectors_.size()) != dim_ || labels_.size() != projectors_.size())
        throw std::invalid_argument(
            "ProjectiveMeasurement: need exactly dim rank-1 projectors and matching labels");
    for (std::size_t i = 1; i < labels_.size(); ++i)
        if (labels_[i - 1] <= labels_[i])
            throw std::invalid_argument("ProjectiveMeasurement: labels must be strictly descending");

    ComplexMatrix sum(dim_);
    for (const auto& p : projectors_) {
        if (p.dim() != dim_) throw std::invalid_argument("ProjectiveMeasurement: mixed dimensions");
        if (p.hermiticity_error() > tol)
            throw std::invalid_argument("ProjectiveMeasurement: projector not Hermitian");
        if (std::abs(p.trace() - cdouble{1.0, 0.0}) > tol)
            throw std::invalid_argument("ProjectiveMeasurement: projector not rank-1");
        sum += p;
    }
    if (sum.max_abs_diff(ComplexMatrix::identity(dim_)) > tol)
        throw std::invalid_argument("ProjectiveMeasurement: projectors do not sum to identity");
    for (std::size_t i = 0; i < projectors_.size(); ++i)
        for (std::size_t j = 0; j < projectors_.size(); ++j) {
            const ComplexMatrix prod = projectors_[i] * projectors_[j];
            const ComplexMatrix& expect = (i == j) ? projectors_[i] : ComplexMatrix(dim_);
            if (prod.max_abs_diff(expect) > tol)
                throw std::invalid_argument(
                    "ProjectiveMeasurement: projectors not idempotent/orthogonal");
        }
}

ProjectiveMeasurement ProjectiveMeasurement::from_observable(const ComplexMatrix& observable,
                                                             double tol) {
    EigenDecomposition eig = eigendecompose_hermitian(observable, tol);
    for (std::size_t i = 1; i < eig.eigenvalues.size(); ++i)
        if (eig.eigenvalues[i - 1] - eig.eigenvalues[i] <= tol) {
            std::ostringstream msg;
            msg << "from_observable: degenerate eigenvalues " << eig.eigenvalues[i - 1] << " and "
                << eig.eigenvalues[i];
            throw std::invalid_argument(msg.str());
        }
    std::vector<ComplexMatrix> projectors;
    projectors.reserve(eig.eigenvectors.size());
    for (const auto& v : eig.eigenvectors) projectors.push_back(ComplexMatrix::outer(v));
    return ProjectiveMeasurement(std::move(projectors), std::move(eig.eigenvalues), tol);
}

ProjectiveMeasurement ProjectiveMeasurement::from_basis(
    const std::vector<std::vector<cdouble>>& vectors, std::vector<double> labels, double tol) {
    std::vector<ComplexMatrix> projectors;
    projectors.reserve(vectors.size());
    for (const auto& v : vectors) projectors.push_back(ComplexMatrix::outer(v));
    return ProjectiveMeasurement(std::move(projectors), std::move(labels), tol);
}

ProjectiveMeasurement ProjectiveMeasurement::conjugated() const {
    std::vector<ComplexMatrix> projectors;
    projectors.reserve(projectors_.size());
    for (const auto& p : projectors_) {
        ComplexMatrix q(dim_);
        for (int r = 0; r < dim_; ++r)
            for (int c = 0; c < dim_; ++c) q(r, c) = std::conj(p(r, c));
        projectors.push_back(std::move(q));
    }
    return ProjectiveMeasurement(std::move(projectors), labels_);
}

ProjectiveMeasurement bloch_measurement(const std::array<double, 3>& n, double tol) {
    const double norm = std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
    if (norm == 0.0) throw std::invalid_argument("bloch_measurement: zero direction");
    if (std::abs(norm - 1.0) > tol)
        throw std::invalid_argument("bloch_measurement: direction must be unit length");

    ComplexMatrix ns(2);
    ns(0, 0) = cdouble{n[2], 0.0};
    ns(0, 1) = cdouble{n[0], -n[1]};
    ns(1, 0) = cdouble{n[0], n[1]};
    ns(1, 1) = cdouble{-n[2], 0.0};

    ComplexMatrix plus = ComplexMatrix::identity(2);
    plus += ns;
    plus *= cdouble{0.5, 0.0};
    ComplexMatrix minus = ComplexMatrix::identity(2);
    minus -= ns;
    minus *= cdouble{0.5, 0.0};
    return ProjectiveMeasurement({std::move(plus), std::move(minus)}, {1.0, -1.0});
}

std::array<double, 3> bloch_direction(const ProjectiveMeasurement& meas) {
    if (meas.dim() != 2) throw std::invalid_argument("bloch_direction: qubit measurement required");
    const ComplexMatrix& p = meas.projector(0);
    return {2.0 * p(1, 0).real(), 2.0 * p(1, 0).imag(), (p(0, 0) - p(1, 1)).real()};
}

}  // namespace qms
