#pragma once

#include <span>
#include <vector>

#include "qms/complex_matrix.hpp"
#include "qms/tolerances.hpp"

namespace qms {

// Hermitian, unit-trace, positive-semidefinite matrix over a tensor product
// of parties.  All three properties are validated on construction.
class DensityMatrix {
public:
    DensityMatrix(ComplexMatrix matrix, std::vector<int> party_dims, double tol = kValidationTol);

    static DensityMatrix pure(std::span<const cdouble> amplitudes, std::vector<int> party_dims);
    static DensityMatrix maximally_mixed(std::vector<int> party_dims);
    static DensityMatrix product(const DensityMatrix& a, const DensityMatrix& b);

    const ComplexMatrix& matrix() const { return m_; }
    int dim() const { return m_.dim(); }
    std::span<const int> party_dims() const { return party_dims_; }
    int parties() const { return static_cast<int>(party_dims_.size()); }

    // Reduced state with the given party traced out (bipartite states only).
    DensityMatrix reduced(int traced_party) const;

private:
    ComplexMatrix m_;
    std::vector<int> party_dims_;
};

// Tr_A applied to a raw dA*dB-dimensional matrix; also used for assemblages,
// where the input is an unnormalized (Pi x 1) rho product.
ComplexMatrix partial_trace_first(const ComplexMatrix& m, int dim_a, int dim_b);
ComplexMatrix partial_trace_second(const ComplexMatrix& m, int dim_a, int dim_b);

}  // namespace qms
