#pragma once

#include "dle/perturbation.hpp"

namespace dle {

/// Sudden change of the cavity frequency omega1 -> omega2. A null quench
/// (omega1 == omega2) is allowed.
struct QuenchSpec {
    CavityFrequency omega1;
    CavityFrequency omega2;
};

/// The five leading transition amplitudes out of the dressed vacuum, in the
/// paper-order truncation (products of first-order dressing coefficients
/// only). All real. a_0_11 and a_2_00 do not vanish at omega1 == omega2;
/// that is a property of the truncation, evaluated verbatim.
struct AmplitudeSet {
    double a_1_10 = 0.0;  // one qubit excited, one photon
    double a_1_01 = 0.0;
    double a_0_11 = 0.0;  // both qubits excited, no photons
    double a_2_11 = 0.0;  // both qubits excited, two photons
    double a_2_00 = 0.0;  // two photons, no qubit excitation
};

AmplitudeSet quench_amplitudes(const SystemParams& params, const QuenchSpec& quench);

struct DleProbabilities {
    double w_10 = 0.0;
    double w_01 = 0.0;
    double w_11 = 0.0;
    /// Set when a probability exceeds 1 (deep resonance); values are not
    /// clamped.
    bool validity_warning = false;
};

DleProbabilities dle_probabilities(const SystemParams& params, const QuenchSpec& quench);

}  // namespace dle
