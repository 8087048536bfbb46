#include "qms/states.hpp"

#include <cmath>
#include <stdexcept>

namespace qms {

namespace {

void check_eta(double eta) {
    if (!(eta >= 0.0 && eta <= 1.0)) throw std::invalid_argument("eta must lie in [0, 1]");
}

// |ij> - |ji> normalized, as an amplitude vector over dim x dim.
std::vector<cdouble> antisymmetric_pair(int dim, int i, int j) {
    std::vector<cdouble> v(static_cast<std::size_t>(dim) * dim, cdouble{0.0, 0.0});
    const double inv = 1.0 / std::sqrt(2.0);
    v[static_cast<std::size_t>(i) * dim + j] = cdouble{inv, 0.0};
    v[static_cast<std::size_t>(j) * dim + i] = cdouble{-inv, 0.0};
    return v;
}

}  // namespace

DensityMatrix werner_qubit(double eta) {
    check_eta(eta);
    ComplexMatrix m = ComplexMatrix::identity(4);
    m *= cdouble{(1.0 - eta) / 4.0, 0.0};
    ComplexMatrix sing = ComplexMatrix::outer(antisymmetric_pair(2, 0, 1));
    sing *= cdouble{eta, 0.0};
    m += sing;
    return DensityMatrix(std::move(m), {2, 2});
}

DensityMatrix werner_qutrit(double eta) {
    check_eta(eta);
    ComplexMatrix m = ComplexMatrix::identity(9);
    m *= cdouble{(1.0 - eta) / 9.0, 0.0};
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            ComplexMatrix p = ComplexMatrix::outer(antisymmetric_pair(3, i, j));
            p *= cdouble{eta / 3.0, 0.0};
            m += p;
        }
    return DensityMatrix(std::move(m), {3, 3});
}

DensityMatrix isotropic_qutrit(double eta) {
    check_eta(eta);
    ComplexMatrix m = ComplexMatrix::identity(9);
    m *= cdouble{(1.0 - eta) / 9.0, 0.0};
    std::vector<cdouble> plus(9, cdouble{0.0, 0.0});
    const double inv = 1.0 / std::sqrt(3.0);
    for (int i = 0; i < 3; ++i) plus[static_cast<std::size_t>(i) * 3 + i] = cdouble{inv, 0.0};
    ComplexMatrix p = ComplexMatrix::outer(plus);
    p *= cdouble{eta, 0.0};
    m += p;
    return DensityMatrix(std::move(m), {3, 3});
}

DensityMatrix singlet() {
    return DensityMatrix::pure(antisymmetric_pair(2, 0, 1), {2, 2});
}

DensityMatrix ghz_state() {
    std::vector<cdouble> v(8, cdouble{0.0, 0.0});
    const double inv = 1.0 / std::sqrt(2.0);
    v[0] = cdouble{inv, 0.0};
    v[7] = cdouble{inv, 0.0};
    return DensityMatrix::pure(v, {2, 2, 2});
}

DensityMatrix state_family(const std::string& name, double eta) {
    if (name == "werner2") return werner_qubit(eta);
    if (name == "werner3") return werner_qutrit(eta);
    if (name == "iso3") return isotropic_qutrit(eta);
    if (name == "singlet") return singlet();
    if (name == "ghz") return ghz_state();
    throw std::invalid_argument("state_family: unknown family '" + name + "'");
}

}  // namespace qms
