#pragma once

#include <map>

#include "dle/hamiltonian.hpp"

namespace dle {

/// First-order dressed ket, kept unnormalized with coefficient 1 on the base
/// label. The correction coefficients are exact closed-form evaluations, so
/// they carry no Fock cutoff.
struct PerturbedState {
    BasisLabel base;
    CavityFrequency omega;
    std::map<BasisLabel, double> coefficients;  // base label not included

    /// Materialize at a cutoff (requires max_photons >= n+1).
    StateVector to_state_vector(FockCutoff cutoff) const;
    /// Norm of the unnormalized ket: sqrt(1 + sum coeff^2).
    double norm() const;
};

PerturbedState perturbed_state(const BasisLabel& label, const SystemParams& params,
                               CavityFrequency omega);

/// Second-order eigenvalue for the given bare label.
double perturbed_energy(const BasisLabel& label, const SystemParams& params,
                        CavityFrequency omega);

double bare_energy(const BasisLabel& label, const SystemParams& params, CavityFrequency omega);

/// Photon-number slope of the dressed ladder for the qubit configuration
/// (q1,q2): omega +- 4 lambda^2 E0 / (omega^2 - E0^2), or omega for the
/// singly excited pair.
double dressed_slope(int q1, int q2, const SystemParams& params, CavityFrequency omega);

/// n-independent second-order shifts, one per qubit configuration.
struct LambShifts {
    double e_l_00 = 0.0;
    double e_l_10 = 0.0;
    double e_l_01 = 0.0;
    double e_l_11 = 0.0;

    double of(int q1, int q2) const {
        if (q1 == 0 && q2 == 0) return e_l_00;
        if (q1 == 1 && q2 == 1) return e_l_11;
        return q1 == 1 ? e_l_10 : e_l_01;
    }
};

LambShifts lamb_shifts(const SystemParams& params, CavityFrequency omega);

}  // namespace dle
