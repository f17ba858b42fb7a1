#pragma once

#include <array>

#include "povmcoh/qstate.hpp"

/// Circuit parameters of the reference experiments.
namespace povmcoh::configs {

// Single-qubit POVM from CNOT·(Ry ⊗ Ry).
inline constexpr std::array<double, 2> kQubitPovmAngles{0.301723, 0.011681};

// Two-qubit POVM. The parameter list has five values for four rotation slots; the
// first four are used.
inline constexpr std::array<double, 5> kTwoQubitPovmListed{0.30173, 0.01168, 0.53991, 0.09537, 0.14651};
inline constexpr std::array<double, 4> kTwoQubitPovmAngles{
    kTwoQubitPovmListed[0], kTwoQubitPovmListed[1], kTwoQubitPovmListed[2], kTwoQubitPovmListed[3]};

// Single-qubit constituents Ry(angle)|0>.
inline constexpr double kQubitPhiAngle = 0.432;
inline constexpr double kQubitPsiAngle = 0.618;

// Two-qubit constituents U(θ)|00>.
inline constexpr std::array<double, 2> kPhi1Angles{0.4827, 0.3760};
inline constexpr std::array<double, 2> kPsi1Angles{0.9394, 0.2212};
inline constexpr std::array<double, 2> kPsi2Angles{0.1557, 0.8190};

Povm qubit_povm();
Povm two_qubit_povm();

PureState qubit_phi();
PureState qubit_psi();
PureState two_qubit_phi1();
PureState two_qubit_psi1();
PureState two_qubit_psi2();

}  // namespace povmcoh::configs
