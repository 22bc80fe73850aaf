#include "dle/quench.hpp"

#include <cmath>

namespace dle {

AmplitudeSet quench_amplitudes(const SystemParams& params, const QuenchSpec& quench) {
    require_off_resonance(params, quench.omega2, "omega2");
    const double e0 = params.e0, lam = params.lambda;
    const double w1 = quench.omega1.omega, w2 = quench.omega2.omega;
    const double lam2 = lam * lam;

    AmplitudeSet amps;
    amps.a_1_10 = lam * (1.0 / (w2 + e0) - 1.0 / (w1 + e0));
    amps.a_1_01 = amps.a_1_10;
    amps.a_0_11 = 2.0 * lam2 / ((w1 + e0) * (w2 - e0));
    amps.a_2_11 = -2.0 * std::sqrt(2.0) * lam2 / ((w1 + e0) * (w2 + e0));
    amps.a_2_00 = -2.0 * std::sqrt(2.0) * lam2 / ((w1 + e0) * (w2 - e0));
    return amps;
}

DleProbabilities dle_probabilities(const SystemParams& params, const QuenchSpec& quench) {
    const AmplitudeSet amps = quench_amplitudes(params, quench);
    DleProbabilities probs;
    probs.w_10 = amps.a_1_10 * amps.a_1_10;
    probs.w_01 = amps.a_1_01 * amps.a_1_01;
    probs.w_11 = amps.a_0_11 * amps.a_0_11 + amps.a_2_11 * amps.a_2_11;
    probs.validity_warning = probs.w_10 > 1.0 || probs.w_01 > 1.0 || probs.w_11 > 1.0;
    return probs;
}

}  // namespace dle
