#pragma once

#include <map>

#include "dle/oracle.hpp"

namespace dle {

enum class RampShape { sudden, linear, smoothstep };

/// Cavity frequency ramp omega_start -> omega_end over [t0, t0+tau].
/// `sudden` means an instantaneous change at t0 (no integration window);
/// the other shapes are continuous with omega(t) > 0 throughout.
struct RampProtocol {
    RampShape shape = RampShape::linear;
    double omega_start = 0.0;
    double omega_end = 0.0;
    double tau = 0.0;
    double t0 = 0.0;

    void validate() const {
        if (!(omega_start > 0.0) || !(omega_end > 0.0))
            throw std::invalid_argument("RampProtocol: frequencies must be > 0");
        if (shape != RampShape::sudden && !(tau > 0.0))
            throw std::invalid_argument("RampProtocol: tau must be > 0 for a finite ramp");
    }
};

struct OmegaSample {
    double omega = 0.0;
    double omega_dot = 0.0;
};

OmegaSample omega_of_t(const RampProtocol& protocol, double t);

struct StepperConfig {
    double rtol = 1e-10;
    double atol = 1e-12;
    double initial_step = 1e-4;
    /// Population allowed at the top Fock layer before aborting.
    double leakage_threshold = 1e-6;
    /// Integrate the a^2 - a†^2 term while omega changes. Off gives the pure
    /// parameter quench of the stationary Hamiltonian (diagnostic).
    bool include_drive = true;
    /// Photon sectors reported in the dressed-overlap table.
    int overlap_max_photons = 4;
};

struct EvolutionResult {
    StateVector final;
    double norm_drift = 0.0;
    /// Final-state amplitudes against dressed eigenstates of H(omega_end).
    std::map<BasisLabel, Complex> overlaps;
    double even_weight_initial = 0.0;
    double even_weight_final = 0.0;
    double max_top_fock = 0.0;
    long steps_accepted = 0;
    long steps_rejected = 0;
};

/// Integrate i d|psi>/dt = [H_static(omega(t)) + drive(t)] |psi> across the
/// ramp with an adaptive embedded Runge-Kutta pair.
EvolutionResult evolve(const StateVector& initial, const RampProtocol& protocol,
                       const SystemParams& params, FockCutoff cutoff,
                       const StepperConfig& config = {});

struct ScanRow {
    double tau = 0.0;
    double p_1_10 = 0.0;
    double p_1_01 = 0.0;
    double p_0_11 = 0.0;
    double p_2_11 = 0.0;
    double p_2_00 = 0.0;
    double total_excitation = 0.0;
    double c_1 = 0.0;  // conditional concurrences of the final state sectors
    double c_2 = 0.0;
};

/// Run `evolve` from the dressed ground state across a tau grid
/// (strictly increasing). Grid points are independent runs.
std::vector<ScanRow> limit_scan(const SystemParams& params, const RampProtocol& base,
                                const std::vector<double>& taus, FockCutoff cutoff,
                                const StepperConfig& config = {});

}  // namespace dle
