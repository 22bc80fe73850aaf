#include "dle/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "dle/hamiltonian.hpp"

namespace dle {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

// Columns spanning the exchange-symmetric subspace: (n,00), (n,+), (n,11).
Eigen::MatrixXd symmetric_basis(FockCutoff cutoff) {
    const int np = cutoff.max_photons + 1;
    Eigen::MatrixXd basis = Eigen::MatrixXd::Zero(cutoff.dimension(), 3 * np);
    for (int n = 0; n < np; ++n) {
        basis(basis_index({n, 0, 0}), 3 * n) = 1.0;
        basis(basis_index({n, 1, 0}), 3 * n + 1) = kInvSqrt2;
        basis(basis_index({n, 0, 1}), 3 * n + 1) = kInvSqrt2;
        basis(basis_index({n, 1, 1}), 3 * n + 2) = 1.0;
    }
    return basis;
}

Eigen::MatrixXd antisymmetric_basis(FockCutoff cutoff) {
    const int np = cutoff.max_photons + 1;
    Eigen::MatrixXd basis = Eigen::MatrixXd::Zero(cutoff.dimension(), np);
    for (int n = 0; n < np; ++n) {
        basis(basis_index({n, 1, 0}), n) = kInvSqrt2;
        basis(basis_index({n, 0, 1}), n) = -kInvSqrt2;
    }
    return basis;
}

void fix_phase(Eigen::Ref<Eigen::VectorXd> v) {
    int imax = 0;
    v.cwiseAbs().maxCoeff(&imax);
    if (v[imax] < 0.0) v = -v;
}

Eigen::VectorXd bare_vector(FockCutoff cutoff, const BasisLabel& label) {
    Eigen::VectorXd v = Eigen::VectorXd::Zero(cutoff.dimension());
    v[basis_index(label)] = 1.0;
    return v;
}

}  // namespace

SpectralDecomposition diagonalize(const SystemParams& params, CavityFrequency omega,
                                  FockCutoff cutoff) {
    if (cutoff.max_photons < 2)
        throw std::invalid_argument("diagonalize: cutoff must keep at least two photons");
    const Eigen::MatrixXd h = h_static(params, omega, cutoff).mat.real();
    const int dim = cutoff.dimension();

    SpectralDecomposition spec{cutoff, omega.omega, Eigen::VectorXd(dim),
                               Eigen::MatrixXd(dim, dim), std::vector<int>(dim, 0)};

    struct Entry {
        double value;
        int parity;
        Eigen::VectorXd vector;
    };
    std::vector<Entry> entries;
    entries.reserve(dim);

    for (int parity : {+1, -1}) {
        const Eigen::MatrixXd basis =
            parity > 0 ? symmetric_basis(cutoff) : antisymmetric_basis(cutoff);
        const Eigen::MatrixXd block = basis.transpose() * h * basis;
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(block);
        if (solver.info() != Eigen::Success)
            throw std::runtime_error("diagonalize: eigensolver failed to converge");
        for (int k = 0; k < block.rows(); ++k) {
            Eigen::VectorXd full = basis * solver.eigenvectors().col(k);
            fix_phase(full);
            entries.push_back({solver.eigenvalues()[k], parity, std::move(full)});
        }
    }

    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        if (a.value != b.value) return a.value < b.value;
        return a.parity > b.parity;  // symmetric first on exact ties
    });
    for (int k = 0; k < dim; ++k) {
        spec.eigenvalues[k] = entries[k].value;
        spec.eigenvectors.col(k) = entries[k].vector;
        spec.swap_parities[k] = entries[k].parity;
    }
    return spec;
}

EigenPair dominant_eigenpair(const SpectralDecomposition& spec, const Eigen::VectorXd& bare,
                             int parity_filter) {
    int best = -1;
    double best_abs = -1.0;
    const Eigen::VectorXd overlaps = spec.eigenvectors.transpose() * bare;
    for (int k = 0; k < overlaps.size(); ++k) {
        if (parity_filter != 0 && spec.swap_parities[k] != parity_filter) continue;
        if (std::abs(overlaps[k]) > best_abs) {
            best_abs = std::abs(overlaps[k]);
            best = k;
        }
    }
    if (best < 0) throw std::logic_error("dominant_eigenpair: empty parity sector");
    EigenPair pair{spec.eigenvalues[best], spec.eigenvectors.col(best),
                   spec.swap_parities[best]};
    if (overlaps[best] < 0.0) pair.vector = -pair.vector;
    return pair;
}

DressedState identify_dressed(const SpectralDecomposition& spec, const BasisLabel& label) {
    if (label.n > spec.cutoff.max_photons)
        throw std::out_of_range("identify_dressed: label outside the cutoff");
    const auto fail = [&](double overlap) {
        std::ostringstream msg;
        msg << "identify_dressed: bare overlap " << overlap << " <= 1/sqrt(2) for label (" << label.n
            << "," << label.q1 << "," << label.q2 << ")";
        return AssignmentFailedError(msg.str());
    };

    DressedState dressed;
    dressed.label = label;
    if (label.q1 == label.q2) {
        const EigenPair pair = dominant_eigenpair(spec, bare_vector(spec.cutoff, label), +1);
        dressed.exchange_parity = ExchangeParity::symmetric;
        dressed.vector = pair.vector;
        dressed.energy = pair.value;
        dressed.overlap_with_bare = std::abs(pair.vector[basis_index(label)]);
        if (!(dressed.overlap_with_bare > kInvSqrt2)) throw fail(dressed.overlap_with_bare);
        return dressed;
    }

    // Degenerate pair: resolve into exchange eigenstates, then recombine.
    const int n = label.n;
    Eigen::VectorXd plus = Eigen::VectorXd::Zero(spec.cutoff.dimension());
    plus[basis_index({n, 1, 0})] = kInvSqrt2;
    plus[basis_index({n, 0, 1})] = kInvSqrt2;
    Eigen::VectorXd minus = Eigen::VectorXd::Zero(spec.cutoff.dimension());
    minus[basis_index({n, 1, 0})] = kInvSqrt2;
    minus[basis_index({n, 0, 1})] = -kInvSqrt2;

    const EigenPair sym = dominant_eigenpair(spec, plus, +1);
    const EigenPair anti = dominant_eigenpair(spec, minus, -1);
    const double sign = label.q1 == 1 ? 1.0 : -1.0;  // |n,10> = (+)+(-), |n,01> = (+)-(-)
    dressed.exchange_parity = ExchangeParity::mixed;
    dressed.vector = (sym.vector + sign * anti.vector) * kInvSqrt2;
    dressed.energy = 0.5 * (sym.value + anti.value);
    dressed.overlap_with_bare = std::abs(dressed.vector[basis_index(label)]);
    if (!(dressed.overlap_with_bare > kInvSqrt2)) throw fail(dressed.overlap_with_bare);
    return dressed;
}

namespace {

ExactQuenchResult quench_overlaps(const SystemParams& params, const QuenchSpec& quench,
                                  FockCutoff cutoff, int table_max_photons) {
    const SpectralDecomposition before = diagonalize(params, quench.omega1, cutoff);
    const SpectralDecomposition after = diagonalize(params, quench.omega2, cutoff);
    const DressedState ground = identify_dressed(before, {0, 0, 0});

    ExactQuenchResult result;
    for (int n = 0; n <= table_max_photons; ++n)
        for (int q1 = 0; q1 <= 1; ++q1)
            for (int q2 = 0; q2 <= 1; ++q2) {
                const BasisLabel label{n, q1, q2};
                const DressedState target = identify_dressed(after, label);
                result.table[label] = target.vector.dot(ground.vector);
            }
    result.amplitudes.a_1_10 = result.table.at({1, 1, 0});
    result.amplitudes.a_1_01 = result.table.at({1, 0, 1});
    result.amplitudes.a_0_11 = result.table.at({0, 1, 1});
    result.amplitudes.a_2_11 = result.table.at({2, 1, 1});
    result.amplitudes.a_2_00 = result.table.at({2, 0, 0});
    return result;
}

}  // namespace

ExactQuenchResult exact_quench_amplitudes(const SystemParams& params, const QuenchSpec& quench,
                                          FockCutoff cutoff, int table_max_photons, double tol) {
    if (table_max_photons < 2)
        throw std::invalid_argument("exact_quench_amplitudes: table must reach two photons");
    ExactQuenchResult result = quench_overlaps(params, quench, cutoff, table_max_photons);
    const ExactQuenchResult refined =
        quench_overlaps(params, quench, FockCutoff(cutoff.max_photons + 5), table_max_photons);

    const auto drift = [&](double a, double b) { return std::abs(a - b); };
    const double max_drift = std::max(
        {drift(result.amplitudes.a_1_10, refined.amplitudes.a_1_10),
         drift(result.amplitudes.a_1_01, refined.amplitudes.a_1_01),
         drift(result.amplitudes.a_0_11, refined.amplitudes.a_0_11),
         drift(result.amplitudes.a_2_11, refined.amplitudes.a_2_11),
         drift(result.amplitudes.a_2_00, refined.amplitudes.a_2_00)});
    if (max_drift > tol) {
        std::ostringstream msg;
        msg << "exact_quench_amplitudes: cutoff_unconverged, N=" << cutoff.max_photons << " -> N+5 moves an amplitude by " << max_drift << " (tol " << tol << ")";
        throw NotConvergedError(msg.str());
    }
    return result;
}

ConvergenceResult cutoff_convergence(const std::function<double(FockCutoff)>& observable,
                                     double tol, int n_min, int n_max) {
    double prev = observable(FockCutoff(n_min));
    for (int n = n_min; n + 2 <= n_max; n += 2) {
        const double next = observable(FockCutoff(n + 2));
        const double scale = std::max({std::abs(prev), std::abs(next), 1e-300});
        if (std::abs(next - prev) / scale < tol) return {n, prev};
        prev = next;
    }
    throw NotConvergedError("cutoff_convergence: not_converged in scan up to N=" +
                            std::to_string(n_max));
}

}  // namespace dle
