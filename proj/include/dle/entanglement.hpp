#pragma once

#include "dle/quench.hpp"

namespace dle {

/// Amplitudes on |00>, |01>, |10>, |11>.
struct TwoQubitPureState {
    Complex a{0.0};
    Complex b{0.0};
    Complex c{0.0};
    Complex d{0.0};

    double norm_squared() const {
        return std::norm(a) + std::norm(b) + std::norm(c) + std::norm(d);
    }
};

/// C = 2|ad - bc|.
double concurrence(const TwoQubitPureState& state);

enum class SectorConvention {
    /// Raw amplitudes plugged in without renormalizing the conditioned
    /// sector. This is the convention the reference values use.
    unnormalized,
    /// Divide by the sector weight before evaluating.
    normalized,
};

struct ConcurrenceReport {
    double c_1 = 0.0;
    double c_2 = 0.0;
    /// Leading-order zero-photon value 2|A_000 A_011| with A_000 = 1.
    /// Extrapolation: no closed form exists for A_000 beyond its leading
    /// value, so treat this as indicative only.
    double c_0_leading = 0.0;
};

ConcurrenceReport conditional_concurrences(
    const SystemParams& params, const QuenchSpec& quench,
    SectorConvention convention = SectorConvention::unnormalized);

/// Restriction of a full state to the four amplitudes at photon number n.
struct SectorProjection {
    TwoQubitPureState state;
    double weight = 0.0;  // norm^2 of the sector before any normalization
};

SectorProjection sector_state(const StateVector& full, int n, bool normalize = false);

}  // namespace dle
