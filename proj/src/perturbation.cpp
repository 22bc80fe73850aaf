#include "dle/perturbation.hpp"

#include <cmath>

namespace dle {

StateVector PerturbedState::to_state_vector(FockCutoff cutoff) const {
    if (cutoff.max_photons < base.n + 1)
        throw DimensionMismatchError("PerturbedState: cutoff too small for base label support");
    StateVector s(cutoff);
    s[base] = 1.0;
    for (const auto& [label, coeff] : coefficients) s[label] = coeff;
    return s;
}

double PerturbedState::norm() const {
    double sq = 1.0;
    for (const auto& [label, coeff] : coefficients) sq += coeff * coeff;
    return std::sqrt(sq);
}

PerturbedState perturbed_state(const BasisLabel& label, const SystemParams& params,
                               CavityFrequency omega) {
    require_off_resonance(params, omega, "omega");
    PerturbedState state{label, omega, {}};
    const double lam = params.lambda;
    if (lam == 0.0) return state;

    const double w = omega.omega, e0 = params.e0;
    const double sqn = std::sqrt(double(label.n));
    const double sqn1 = std::sqrt(double(label.n + 1));
    const int n = label.n;
    auto put = [&](int m, int q1, int q2, double c) {
        if (m >= 0) state.coefficients[{m, q1, q2}] = c;
    };

    if (label.q1 == 0 && label.q2 == 0) {
        put(n - 1, 1, 0, lam * sqn / (w - e0));
        put(n - 1, 0, 1, lam * sqn / (w - e0));
        put(n + 1, 1, 0, -lam * sqn1 / (w + e0));
        put(n + 1, 0, 1, -lam * sqn1 / (w + e0));
    } else if (label.q1 == 1 && label.q2 == 1) {
        put(n - 1, 1, 0, lam * sqn / (w + e0));
        put(n - 1, 0, 1, lam * sqn / (w + e0));
        put(n + 1, 1, 0, -lam * sqn1 / (w - e0));
        put(n + 1, 0, 1, -lam * sqn1 / (w - e0));
    } else {
        // (n,10) and (n,01) dress identically: onto 00 through the qubit that
        // is excited and onto 11 through the one that is not.
        put(n - 1, 0, 0, lam * sqn / (w + e0));
        put(n + 1, 1, 1, -lam * sqn1 / (w + e0));
        put(n - 1, 1, 1, lam * sqn / (w - e0));
        put(n + 1, 0, 0, -lam * sqn1 / (w - e0));
    }
    return state;
}

double bare_energy(const BasisLabel& label, const SystemParams& params, CavityFrequency omega) {
    return omega.omega * label.n + params.e0 * (label.q1 + label.q2);
}

double dressed_slope(int q1, int q2, const SystemParams& params, CavityFrequency omega) {
    const double w = omega.omega, e0 = params.e0, lam = params.lambda;
    if (q1 == q2) {
        const double shift = 4.0 * lam * lam * e0 / (w * w - e0 * e0);
        return q1 == 0 ? w + shift : w - shift;
    }
    return w;
}

double perturbed_energy(const BasisLabel& label, const SystemParams& params,
                        CavityFrequency omega) {
    require_off_resonance(params, omega, "omega");
    return dressed_slope(label.q1, label.q2, params, omega) * label.n +
           params.e0 * (label.q1 + label.q2) + lamb_shifts(params, omega).of(label.q1, label.q2);
}

LambShifts lamb_shifts(const SystemParams& params, CavityFrequency omega) {
    require_off_resonance(params, omega, "omega");
    const double w = omega.omega, e0 = params.e0;
    const double lam2 = params.lambda * params.lambda;
    LambShifts shifts;
    shifts.e_l_00 = -2.0 * lam2 / (w + e0);
    shifts.e_l_10 = 2.0 * lam2 * w / (w * w - e0 * e0);
    shifts.e_l_01 = shifts.e_l_10;
    shifts.e_l_11 = -2.0 * lam2 / (w - e0);
    return shifts;
}

}  // namespace dle
