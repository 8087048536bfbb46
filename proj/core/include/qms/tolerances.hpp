#pragma once

namespace qms {

// Absolute tolerance for validating user-supplied data (states, distributions).
inline constexpr double kValidationTol = 1e-9;

// Tighter tolerance for identities the library constructs itself
// (projector completeness, reconstruction, no-signalling of reductions).
inline constexpr double kIdentityTol = 1e-10;

// Tolerance on linear-feasibility residuals and certificates.
inline constexpr double kSolverTol = 1e-8;

}  // namespace qms
