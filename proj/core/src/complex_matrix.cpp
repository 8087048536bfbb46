#include "qms/complex_matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace qms {

ComplexMatrix::ComplexMatrix(int dim) : dim_(dim) {
    if (dim <= 0) throw std::invalid_argument("ComplexMatrix: dim must be positive");
    a_.assign(static_cast<std::size_t>(dim) * dim, cdouble{0.0, 0.0});
}

ComplexMatrix::ComplexMatrix(int dim, std::vector<cdouble> entries) : dim_(dim), a_(std::move(entries)) {
    if (dim <= 0) throw std::invalid_argument("ComplexMatrix: dim must be positive");
    if (a_.size() != static_cast<std::size_t>(dim) * dim)
        throw std::invalid_argument("ComplexMatrix: entry count must equal dim^2");
}

ComplexMatrix ComplexMatrix::identity(int dim) {
    ComplexMatrix m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::outer(std::span<const cdouble> v) {
    ComplexMatrix m(static_cast<int>(v.size()));
    for (int r = 0; r < m.dim_; ++r)
        for (int c = 0; c < m.dim_; ++c) m(r, c) = v[r] * std::conj(v[c]);
    return m;
}

ComplexMatrix ComplexMatrix::kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    const int da = a.dim_, db = b.dim_;
    ComplexMatrix m(da * db);
    for (int ra = 0; ra < da; ++ra)
        for (int rb = 0; rb < db; ++rb)
            for (int ca = 0; ca < da; ++ca)
                for (int cb = 0; cb < db; ++cb)
                    m(ra * db + rb, ca * db + cb) = a(ra, ca) * b(rb, cb);
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix m(dim_);
    for (int r = 0; r < dim_; ++r)
        for (int c = 0; c < dim_; ++c) m(r, c) = std::conj((*this)(c, r));
    return m;
}

cdouble ComplexMatrix::trace() const {
    cdouble t = 0.0;
    for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::hermiticity_error() const {
    double worst = 0.0;
    for (int r = 0; r < dim_; ++r)
        for (int c = 0; c < dim_; ++c)
            worst = std::max(worst, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
    return worst;
}

double ComplexMatrix::max_abs() const {
    double worst = 0.0;
    for (const auto& z : a_) worst = std::max(worst, std::abs(z));
    return worst;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& other) const {
    if (other.dim_ != dim_) throw std::invalid_argument("max_abs_diff: dimension mismatch");
    double worst = 0.0;
    for (std::size_t i = 0; i < a_.size(); ++i) worst = std::max(worst, std::abs(a_[i] - other.a_[i]));
    return worst;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
    if (other.dim_ != dim_) throw std::invalid_argument("operator+=: dimension mismatch");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += other.a_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
    if (other.dim_ != dim_) throw std::invalid_argument("operator-=: dimension mismatch");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= other.a_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cdouble scale) {
    for (auto& z : a_) z *= scale;
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim_ != b.dim_) throw std::invalid_argument("operator*: dimension mismatch");
    const int n = a.dim_;
    ComplexMatrix m(n);
    for (int r = 0; r < n; ++r)
        for (int k = 0; k < n; ++k) {
            const cdouble ark = a(r, k);
            if (ark == cdouble{0.0, 0.0}) continue;
            for (int c = 0; c < n; ++c) m(r, c) += ark * b(k, c);
        }
    return m;
}

ComplexMatrix pauli_x() { return ComplexMatrix(2, {0.0, 1.0, 1.0, 0.0}); }

ComplexMatrix pauli_y() {
    return ComplexMatrix(2, {cdouble{0, 0}, cdouble{0, -1}, cdouble{0, 1}, cdouble{0, 0}});
}

ComplexMatrix pauli_z() { return ComplexMatrix(2, {1.0, 0.0, 0.0, -1.0}); }

}  // namespace qms
