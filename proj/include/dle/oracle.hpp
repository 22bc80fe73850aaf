#pragma once

#include <functional>
#include <map>

#include "dle/quench.hpp"

namespace dle {

/// Full dense eigendecomposition of the stationary Hamiltonian, computed per
/// exchange-parity block so that every eigenvector is an exact swap
/// eigenstate even inside degenerate pairs. Eigenvectors are real in the
/// canonical basis, sorted ascending by eigenvalue, with the
/// largest-magnitude component made positive.
struct SpectralDecomposition {
    FockCutoff cutoff;
    double omega = 0.0;
    Eigen::VectorXd eigenvalues;
    Eigen::MatrixXd eigenvectors;    // one column per eigenvalue
    std::vector<int> swap_parities;  // +1 symmetric, -1 antisymmetric
};

SpectralDecomposition diagonalize(const SystemParams& params, CavityFrequency omega,
                                  FockCutoff cutoff);

struct EigenPair {
    double value = 0.0;
    Eigen::VectorXd vector;
    int swap_parity = 0;
};

/// Eigenpair with maximal |<bare|v>|, optionally restricted to one swap
/// parity (+1/-1; 0 means no restriction). The returned vector is sign-fixed
/// so that <bare|v> > 0.
EigenPair dominant_eigenpair(const SpectralDecomposition& spec, const Eigen::VectorXd& bare,
                             int parity_filter = 0);

enum class ExchangeParity { symmetric, antisymmetric, mixed };

/// Numerical dressed state connected to a bare label. For the degenerate
/// (n,10)/(n,01) pair the eigenspace is resolved into exchange
/// symmetric/antisymmetric combinations first, and the returned vector is
/// (v_sym +- v_anti)/sqrt(2); its parity tag is then `mixed` and `energy` is
/// the expectation value rather than an eigenvalue.
struct DressedState {
    BasisLabel label;
    ExchangeParity exchange_parity = ExchangeParity::symmetric;
    Eigen::VectorXd vector;
    double overlap_with_bare = 0.0;
    double energy = 0.0;
};

DressedState identify_dressed(const SpectralDecomposition& spec, const BasisLabel& label);

struct ExactQuenchResult {
    AmplitudeSet amplitudes;
    /// <dressed(label, omega2) | dressed(0;00, omega1)> for every label up to
    /// the requested photon number.
    std::map<BasisLabel, double> table;
};

/// Brute-force quench amplitudes from exact diagonalization at both
/// frequencies. Throws NotConvergedError if any of the five reported
/// amplitudes moves by more than `tol` when the cutoff is raised by 5.
ExactQuenchResult exact_quench_amplitudes(const SystemParams& params, const QuenchSpec& quench,
                                          FockCutoff cutoff, int table_max_photons = 2,
                                          double tol = 1e-9);

struct ConvergenceResult {
    int cutoff = 0;
    double value = 0.0;
};

/// Smallest N in {n_min, n_min+2, ..., n_max} whose observable agrees with
/// the next scan point to relative tolerance `tol`.
ConvergenceResult cutoff_convergence(const std::function<double(FockCutoff)>& observable,
                                     double tol, int n_min = 4, int n_max = 60);

}  // namespace dle
