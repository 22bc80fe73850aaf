#pragma once

#include <random>
#include <set>

#include "dle/dynamics.hpp"
#include "dle/perturbation.hpp"

namespace dle::testing {

/// Test-only amplitude path: plain inner product of two first-order kets
/// (coefficient 1 on each base label). Independent of the closed forms in
/// the quench module.
inline double perturbative_overlap(const PerturbedState& bra, const PerturbedState& ket) {
    const auto coeff = [](const PerturbedState& s, const BasisLabel& l) {
        if (l == s.base) return 1.0;
        const auto it = s.coefficients.find(l);
        return it == s.coefficients.end() ? 0.0 : it->second;
    };
    std::set<BasisLabel> support{bra.base, ket.base};
    for (const auto& [l, c] : bra.coefficients) support.insert(l);
    for (const auto& [l, c] : ket.coefficients) support.insert(l);
    double sum = 0.0;
    for (const auto& l : support) sum += coeff(bra, l) * coeff(ket, l);
    return sum;
}

/// Overlap-path quench amplitude <label; omega2 | 0,00; omega1>.
inline double overlap_amplitude(const BasisLabel& label, const SystemParams& params,
                                const QuenchSpec& quench) {
    return perturbative_overlap(perturbed_state(label, params, quench.omega2),
                                perturbed_state({0, 0, 0}, params, quench.omega1));
}

struct RandomPoint {
    SystemParams params;
    QuenchSpec quench;
};

/// Valid, well-conditioned parameter sets: off resonance, distinct quench
/// frequencies, perturbative coupling.
inline RandomPoint random_point(std::mt19937& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double e0 = 0.5 + 9.5 * u(rng);
    const double lambda = (0.01 + 0.29 * u(rng)) * e0;
    const auto draw_omega = [&] {
        while (true) {
            const double w = (0.1 + 2.9 * u(rng)) * e0;
            if (std::abs(w - e0) > 0.05 * e0) return w;
        }
    };
    double w1 = draw_omega(), w2 = draw_omega();
    while (std::abs(w1 - w2) < 0.01 * e0) w2 = draw_omega();
    return {SystemParams(e0, lambda), QuenchSpec{CavityFrequency(w1), CavityFrequency(w2)}};
}

/// Test-only cross-validation stepper: psi -> exp(-i H(t + h/2) h) psi with a
/// fixed step count, exponentiating through a Hermitian eigendecomposition.
inline StateVector exponential_midpoint_evolve(const StateVector& initial,
                                               const RampProtocol& protocol,
                                               const SystemParams& params, FockCutoff cutoff,
                                               long steps, bool include_drive = true) {
    Eigen::VectorXcd psi = initial.amps;
    const double h = protocol.tau / double(steps);
    for (long k = 0; k < steps; ++k) {
        const double t_mid = protocol.t0 + (double(k) + 0.5) * h;
        const OmegaSample w = omega_of_t(protocol, t_mid);
        OperatorMatrix ham = h_static(params, CavityFrequency(w.omega), cutoff);
        if (include_drive)
            ham = ham + drive_term(CavityFrequency(w.omega), w.omega_dot, cutoff);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(ham.mat);
        const Eigen::VectorXcd phases =
            (Complex(0.0, -1.0) * h * solver.eigenvalues().cast<Complex>().array()).exp();
        psi = solver.eigenvectors() *
              (phases.array() * (solver.eigenvectors().adjoint() * psi).array()).matrix();
    }
    return {cutoff, psi};
}

inline double rel_diff(double a, double b) {
    const double scale = std::max(std::abs(a), std::abs(b));
    return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

}  // namespace dle::testing
