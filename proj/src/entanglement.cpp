#include "dle/entanglement.hpp"

#include <cmath>

namespace dle {

double concurrence(const TwoQubitPureState& s) {
    return 2.0 * std::abs(s.a * s.d - s.b * s.c);
}

ConcurrenceReport conditional_concurrences(const SystemParams& params, const QuenchSpec& quench,
                                           SectorConvention convention) {
    const AmplitudeSet amps = quench_amplitudes(params, quench);
    ConcurrenceReport report;

    // one created photon: b = A_1_01, c = A_1_10
    const TwoQubitPureState one{0.0, amps.a_1_01, amps.a_1_10, 0.0};
    // two created photons: a = A_2_00, d = A_2_11
    const TwoQubitPureState two{amps.a_2_00, 0.0, 0.0, amps.a_2_11};
    // no created photons: a = 1 at leading order, d = A_0_11
    const TwoQubitPureState zero{1.0, 0.0, 0.0, amps.a_0_11};

    report.c_1 = concurrence(one);
    report.c_2 = concurrence(two);
    report.c_0_leading = concurrence(zero);
    if (convention == SectorConvention::normalized) {
        report.c_1 /= one.norm_squared();
        report.c_2 /= two.norm_squared();
        report.c_0_leading /= zero.norm_squared();
    }
    return report;
}

SectorProjection sector_state(const StateVector& full, int n, bool normalize) {
    if (n < 0 || n > full.cutoff.max_photons)
        throw std::out_of_range("sector_state: photon number outside the cutoff");
    SectorProjection proj;
    proj.state.a = full[{n, 0, 0}];
    proj.state.b = full[{n, 0, 1}];
    proj.state.c = full[{n, 1, 0}];
    proj.state.d = full[{n, 1, 1}];
    proj.weight = proj.state.norm_squared();
    if (normalize && proj.weight > 0.0) {
        const double scale = 1.0 / std::sqrt(proj.weight);
        proj.state.a *= scale;
        proj.state.b *= scale;
        proj.state.c *= scale;
        proj.state.d *= scale;
    }
    return proj;
}

}  // namespace dle
