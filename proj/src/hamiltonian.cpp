#include "dle/hamiltonian.hpp"

#include <cmath>

namespace dle {

OperatorMatrix h0(const SystemParams& params, CavityFrequency omega, FockCutoff cutoff) {
    OperatorMatrix op(cutoff);
    for (const auto& l : build_basis(cutoff))
        op.at(l, l) = params.e0 * (l.q1 + l.q2) + omega.omega * l.n;
    return op;
}

OperatorMatrix interaction(const SystemParams& params, FockCutoff cutoff,
                           InteractionVariant variant) {
    OperatorMatrix op(cutoff);
    const double lam = params.lambda;
    const bool rwa = variant != InteractionVariant::counter;
    const bool counter = variant != InteractionVariant::rwa;
    for (const auto& l : build_basis(cutoff)) {
        for (int j = 1; j <= 2; ++j) {
            int q = j == 1 ? l.q1 : l.q2;
            BasisLabel flipped = l;
            (j == 1 ? flipped.q1 : flipped.q2) = 1 - q;
            // sigma+ a and sigma- a†  conserve the excitation number;
            // sigma+ a† and sigma- a  change it by two.
            const bool raising = q == 0;
            if (l.n >= 1) {  // annihilate a photon
                BasisLabel to = flipped;
                to.n = l.n - 1;
                if ((raising && rwa) || (!raising && counter))
                    op.at(to, l) += lam * std::sqrt(double(l.n));
            }
            if (l.n + 1 <= cutoff.max_photons) {  // create a photon
                BasisLabel to = flipped;
                to.n = l.n + 1;
                if ((raising && counter) || (!raising && rwa))
                    op.at(to, l) += lam * std::sqrt(double(l.n + 1));
            }
        }
    }
    return op;
}

OperatorMatrix h_static(const SystemParams& params, CavityFrequency omega, FockCutoff cutoff) {
    return h0(params, omega, cutoff) + interaction(params, cutoff, InteractionVariant::total);
}

OperatorMatrix drive_term(CavityFrequency omega, double omega_dot, FockCutoff cutoff) {
    OperatorMatrix op(cutoff);
    const double coef = omega_dot / (4.0 * omega.omega);
    const Complex i(0.0, 1.0);
    for (const auto& l : build_basis(cutoff)) {
        if (l.n + 2 <= cutoff.max_photons) {
            const double amp = std::sqrt(double(l.n + 1) * double(l.n + 2));
            BasisLabel up = {l.n + 2, l.q1, l.q2};
            op.at(up, l) += -i * coef * amp;  // -i (wdot/4w) a†^2
            op.at(l, up) += i * coef * amp;   //  i (wdot/4w) a^2
        }
    }
    return op;
}

}  // namespace dle
