#include "povmcoh/configs.hpp"

namespace povmcoh::configs {

Povm qubit_povm() { return povm_from_dilation(dilation_unitary_1q(kQubitPovmAngles), 1, 1); }
Povm two_qubit_povm() { return povm_from_dilation(dilation_unitary_2q(kTwoQubitPovmAngles), 2, 2); }

namespace {
PureState ry_on_zero(double angle) { return PureState(ry(angle) * PureState::basis(2, 0).amplitudes()); }
PureState dilated_zero(const std::array<double, 2>& theta) {
  return PureState(dilation_unitary_1q(theta) * PureState::basis(4, 0).amplitudes());
}
}  // namespace

PureState qubit_phi() { return ry_on_zero(kQubitPhiAngle); }
PureState qubit_psi() { return ry_on_zero(kQubitPsiAngle); }
PureState two_qubit_phi1() { return dilated_zero(kPhi1Angles); }
PureState two_qubit_psi1() { return dilated_zero(kPsi1Angles); }
PureState two_qubit_psi2() { return dilated_zero(kPsi2Angles); }

}  // namespace povmcoh::configs
