#pragma once

#include <string>

#include "qms/density_matrix.hpp"

namespace qms {

// Two-qubit Werner state (1-eta)/4 1x1 + eta |psi-><psi-|, eta in [0,1].
DensityMatrix werner_qubit(double eta);

// Two-qutrit Werner state: (1-eta)/9 1x1 + eta/3 sum over the three
// antisymmetric singlet projectors |psi-_ij>, eta in [0,1].
DensityMatrix werner_qutrit(double eta);

// Two-qutrit isotropic state: (1-eta)/9 1x1 + eta |psi+><psi+|, eta in [0,1].
DensityMatrix isotropic_qutrit(double eta);

// Two-qubit singlet |psi-> = (|01> - |10>)/sqrt(2).
DensityMatrix singlet();

// Three-qubit GHZ state (|000> + |111>)/sqrt(2).
DensityMatrix ghz_state();

// Lookup by family name ("werner2", "werner3", "iso3", "singlet", "ghz");
// `eta` is ignored for parameter-free families.
DensityMatrix state_family(const std::string& name, double eta);

}  // namespace qms
