#include "qms/density_matrix.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "qms/hermitian_eigen.hpp"

namespace qms {

DensityMatrix::DensityMatrix(ComplexMatrix matrix, std::vector<int> party_dims, double tol)
    : m_(std::move(matrix)), party_dims_(std::move(party_dims)) {
    int prod = 1;
    for (const int d : party_dims_) {
        if (d <= 0) throw std::invalid_argument("DensityMatrix: party dims must be positive");
        prod *= d;
    }
    if (party_dims_.empty() || prod != m_.dim())
        throw std::invalid_argument("DensityMatrix: product of party dims must equal matrix dim");

    const double herm = m_.hermiticity_error();
    if (herm > tol) {
        std::ostringstream msg;
        msg << "DensityMatrix: hermiticity violation " << herm;
        throw std::invalid_argument(msg.str());
    }
    const double trace_err = std::abs(m_.trace() - cdouble{1.0, 0.0});
    if (trace_err > tol) {
        std::ostringstream msg;
        msg << "DensityMatrix: trace deviates from 1 by " << trace_err;
        throw std::invalid_argument(msg.str());
    }
    const double min_eig = lambda_min(m_);
    if (min_eig < -tol) {
        std::ostringstream msg;
        msg << "DensityMatrix: negative eigenvalue " << min_eig;
        throw std::invalid_argument(msg.str());
    }
}

DensityMatrix DensityMatrix::pure(std::span<const cdouble> amplitudes, std::vector<int> party_dims) {
    double norm2 = 0.0;
    for (const auto& z : amplitudes) norm2 += std::norm(z);
    if (norm2 <= 0.0) throw std::invalid_argument("DensityMatrix::pure: zero vector");
    std::vector<cdouble> v(amplitudes.begin(), amplitudes.end());
    const double inv = 1.0 / std::sqrt(norm2);
    for (auto& z : v) z *= inv;
    return DensityMatrix(ComplexMatrix::outer(v), std::move(party_dims));
}

DensityMatrix DensityMatrix::maximally_mixed(std::vector<int> party_dims) {
    int prod = 1;
    for (const int d : party_dims) prod *= d;
    ComplexMatrix m = ComplexMatrix::identity(prod);
    m *= cdouble{1.0 / prod, 0.0};
    return DensityMatrix(std::move(m), std::move(party_dims));
}

DensityMatrix DensityMatrix::product(const DensityMatrix& a, const DensityMatrix& b) {
    std::vector<int> dims(a.party_dims_.begin(), a.party_dims_.end());
    dims.insert(dims.end(), b.party_dims_.begin(), b.party_dims_.end());
    return DensityMatrix(ComplexMatrix::kron(a.m_, b.m_), std::move(dims));
}

DensityMatrix DensityMatrix::reduced(int traced_party) const {
    if (party_dims_.size() != 2) throw std::invalid_argument("reduced: state must be bipartite");
    if (traced_party != 0 && traced_party != 1) throw std::invalid_argument("reduced: bad party index");
    const int da = party_dims_[0], db = party_dims_[1];
    if (traced_party == 0) return DensityMatrix(partial_trace_first(m_, da, db), {db});
    return DensityMatrix(partial_trace_second(m_, da, db), {da});
}

ComplexMatrix partial_trace_first(const ComplexMatrix& m, int dim_a, int dim_b) {
    if (m.dim() != dim_a * dim_b) throw std::invalid_argument("partial_trace_first: dimension mismatch");
    ComplexMatrix out(dim_b);
    for (int k = 0; k < dim_b; ++k)
        for (int l = 0; l < dim_b; ++l) {
            cdouble s = 0.0;
            for (int a = 0; a < dim_a; ++a) s += m(a * dim_b + k, a * dim_b + l);
            out(k, l) = s;
        }
    return out;
}

ComplexMatrix partial_trace_second(const ComplexMatrix& m, int dim_a, int dim_b) {
    if (m.dim() != dim_a * dim_b) throw std::invalid_argument("partial_trace_second: dimension mismatch");
    ComplexMatrix out(dim_a);
    for (int k = 0; k < dim_a; ++k)
        for (int l = 0; l < dim_a; ++l) {
            cdouble s = 0.0;
            for (int b = 0; b < dim_b; ++b) s += m(k * dim_b + b, l * dim_b + b);
            out(k, l) = s;
        }
    return out;
}

}  // namespace qms
