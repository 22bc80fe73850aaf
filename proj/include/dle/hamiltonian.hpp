#pragma once

#include <cstdio>

#include "dle/hilbert.hpp"

namespace dle {

/// Static physics knobs: qubit transition frequency E0 and qubit-photon
/// coupling lambda, both in one consistent angular-frequency unit (hbar = 1).
struct SystemParams {
    double e0 = 0.0;
    double lambda = 0.0;

    SystemParams(double e0_, double lambda_) : e0(e0_), lambda(lambda_) { validate(); }

    void validate() const {
        if (!(e0 > 0.0)) throw std::invalid_argument("SystemParams: e0 must be > 0");
        if (lambda < 0.0) throw std::invalid_argument("SystemParams: lambda must be >= 0");
        if (lambda / e0 >= 1.0)
            throw std::invalid_argument("SystemParams: lambda/e0 >= 1 is outside the model's regime");
    }
    /// Perturbative sanity: true above lambda/e0 = 0.5 (warn, don't reject).
    bool strong_coupling_warning() const { return lambda / e0 > 0.5; }
};

struct CavityFrequency {
    double omega = 0.0;

    explicit CavityFrequency(double w) : omega(w) {
        if (!(omega > 0.0)) throw std::invalid_argument("CavityFrequency: omega must be > 0");
    }
    bool operator==(const CavityFrequency&) const = default;
};

inline constexpr double kNearResonanceEps = 1e-9;

/// Every closed form with an (omega - E0) denominator calls this first.
inline void require_off_resonance(const SystemParams& p, CavityFrequency w,
                                  const char* name, double eps = kNearResonanceEps) {
    if (std::abs(w.omega - p.e0) < eps * p.e0) {
        char bound[24];
        std::snprintf(bound, sizeof bound, "%.0e", eps);
        throw NearResonanceError(std::string(name) + " is within " + bound +
                                 " * e0 of the qubit transition frequency e0");
    }
}

/// H0 = E0 (q1+q2) + omega n, diagonal in the canonical basis.
OperatorMatrix h0(const SystemParams& params, CavityFrequency omega, FockCutoff cutoff);

enum class InteractionVariant { total, rwa, counter };

/// Qubit-photon interaction. `total` = `rwa` + `counter` exactly;
/// the counter-rotating part changes the total excitation number by +-2.
OperatorMatrix interaction(const SystemParams& params, FockCutoff cutoff,
                           InteractionVariant variant = InteractionVariant::total);

/// Stationary Hamiltonian H = H0 + V_total.
OperatorMatrix h_static(const SystemParams& params, CavityFrequency omega, FockCutoff cutoff);

/// Nonstationary drive i (omega_dot / 4 omega)(a^2 - a†^2), Hermitian.
OperatorMatrix drive_term(CavityFrequency omega, double omega_dot, FockCutoff cutoff);

}  // namespace dle
