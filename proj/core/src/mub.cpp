#include "qms/mub.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qms/complex_matrix.hpp"

namespace qms {

namespace {

// Column-vector bases of the three qutrit phase bases, encoded as integer
// powers of e^{i*omega} with omega = 2*pi/3.  phases[b][row][col].
constexpr int kQutritPhases[3][3][3] = {
    {{0, -1, 1}, {0, 1, -1}, {0, 0, 0}},
    {{-1, 1, 0}, {-1, 0, 1}, {0, 0, 0}},
    {{1, 0, -1}, {1, -1, 0}, {0, 0, 0}},
};

ProjectiveMeasurement phase_basis(const int phases[3][3]) {
    const double omega = 2.0 * std::numbers::pi / 3.0;
    const double inv = 1.0 / std::sqrt(3.0);
    std::vector<std::vector<cdouble>> columns(3, std::vector<cdouble>(3));
    for (int c = 0; c < 3; ++c)
        for (int r = 0; r < 3; ++r)
            columns[c][r] = inv * std::exp(cdouble{0.0, omega * phases[r][c]});
    return ProjectiveMeasurement::from_basis(columns, {1.0, 0.0, -1.0});
}

}  // namespace

std::vector<ProjectiveMeasurement> mub_family(int dim) {
    if (dim == 2) {
        return {ProjectiveMeasurement::from_observable(pauli_x()),
                ProjectiveMeasurement::from_observable(pauli_y()),
                ProjectiveMeasurement::from_observable(pauli_z())};
    }
    if (dim == 3) {
        std::vector<std::vector<cdouble>> comp(3, std::vector<cdouble>(3, cdouble{0.0, 0.0}));
        for (int i = 0; i < 3; ++i) comp[i][i] = 1.0;
        std::vector<ProjectiveMeasurement> out;
        out.push_back(ProjectiveMeasurement::from_basis(comp, {1.0, 0.0, -1.0}));
        for (const auto& phases : kQutritPhases) out.push_back(phase_basis(phases));
        return out;
    }
    throw std::invalid_argument("mub_family: only dims 2 and 3 are supported");
}

}  // namespace qms
