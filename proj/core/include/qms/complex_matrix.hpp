#pragma once

#include <complex>
#include <span>
#include <vector>

namespace qms {

using cdouble = std::complex<double>;

// Dense square complex matrix, row-major storage.
class ComplexMatrix {
public:
    explicit ComplexMatrix(int dim);
    ComplexMatrix(int dim, std::vector<cdouble> entries);

    static ComplexMatrix identity(int dim);
    // |v><v| for a (not necessarily normalized) vector v.
    static ComplexMatrix outer(std::span<const cdouble> v);
    static ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

    int dim() const { return dim_; }
    cdouble& operator()(int r, int c) { return a_[static_cast<std::size_t>(r) * dim_ + c]; }
    const cdouble& operator()(int r, int c) const {
        return a_[static_cast<std::size_t>(r) * dim_ + c];
    }
    std::span<const cdouble> entries() const { return a_; }

    ComplexMatrix adjoint() const;
    cdouble trace() const;
    double hermiticity_error() const;  // max_{r,c} |a(r,c) - conj(a(c,r))|
    double max_abs() const;
    double max_abs_diff(const ComplexMatrix& other) const;

    ComplexMatrix& operator+=(const ComplexMatrix& other);
    ComplexMatrix& operator-=(const ComplexMatrix& other);
    ComplexMatrix& operator*=(cdouble scale);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(cdouble s, ComplexMatrix a) { return a *= s; }
    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

private:
    int dim_ = 0;
    std::vector<cdouble> a_;
};

// Pauli matrices and common qubit projectors.
ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

}  // namespace qms
