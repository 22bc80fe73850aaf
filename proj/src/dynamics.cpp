#include "dle/dynamics.hpp"

#include <cmath>

#include "dle/entanglement.hpp"
#include "dle/hamiltonian.hpp"

namespace dle {

OmegaSample omega_of_t(const RampProtocol& protocol, double t) {
    protocol.validate();
    if (protocol.shape == RampShape::sudden)
        return t < protocol.t0 ? OmegaSample{protocol.omega_start, 0.0}
                               : OmegaSample{protocol.omega_end, 0.0};
    if (t <= protocol.t0) return {protocol.omega_start, 0.0};
    if (t >= protocol.t0 + protocol.tau) return {protocol.omega_end, 0.0};
    const double s = (t - protocol.t0) / protocol.tau;
    const double span = protocol.omega_end - protocol.omega_start;
    if (protocol.shape == RampShape::linear)
        return {protocol.omega_start + span * s, span / protocol.tau};
    // smoothstep: C1 at both endpoints
    const double u = s * s * (3.0 - 2.0 * s);
    const double du = 6.0 * s * (1.0 - s) / protocol.tau;
    return {protocol.omega_start + span * u, span * du};
}

namespace {

// Dormand-Prince 5(4) coefficients.
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                 b6 = 11.0 / 84;
constexpr double e1 = 35.0 / 384 - 5179.0 / 57600, e3 = 500.0 / 1113 - 7571.0 / 16695,
                 e4 = 125.0 / 192 - 393.0 / 640, e5 = -2187.0 / 6784 + 92097.0 / 339200,
                 e6 = 11.0 / 84 - 187.0 / 2100, e7 = -1.0 / 40;
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;

// Right-hand side of i dpsi/dt = H(t) psi, split into time-independent
// pieces: H(t) = base + omega(t) * n + i (omega_dot/4omega)(a^2 - a†^2).
struct Rhs {
    const RampProtocol& protocol;
    bool include_drive;
    Eigen::MatrixXcd base;      // E0 qubit part + V_total
    Eigen::VectorXd photon_n;   // diagonal photon numbers
    Eigen::MatrixXd quad;       // a^2 - a†^2 (real, antisymmetric)

    Rhs(const SystemParams& params, const RampProtocol& proto, FockCutoff cutoff, bool drive)
        : protocol(proto), include_drive(drive) {
        base = interaction(params, cutoff).mat;
        photon_n.resize(cutoff.dimension());
        for (const auto& l : build_basis(cutoff)) {
            base(basis_index(l), basis_index(l)) += params.e0 * (l.q1 + l.q2);
            photon_n[basis_index(l)] = double(l.n);
        }
        quad = Eigen::MatrixXd::Zero(cutoff.dimension(), cutoff.dimension());
        for (const auto& l : build_basis(cutoff)) {
            if (l.n + 2 <= cutoff.max_photons) {
                const double amp = std::sqrt(double(l.n + 1) * double(l.n + 2));
                quad(basis_index(l), basis_index({l.n + 2, l.q1, l.q2})) += amp;   // a^2
                quad(basis_index({l.n + 2, l.q1, l.q2}), basis_index(l)) -= amp;   // -a†^2
            }
        }
    }

    Eigen::VectorXcd operator()(double t, const Eigen::VectorXcd& psi) const {
        const OmegaSample w = omega_of_t(protocol, t);
        const Complex mi(0.0, -1.0);
        Eigen::VectorXcd out = mi * (base * psi);
        out += (mi * w.omega) * psi.cwiseProduct(photon_n.cast<Complex>());
        if (include_drive && w.omega_dot != 0.0) {
            // -i * i c (a^2 - a†^2) psi = c (a^2 - a†^2) psi
            const double coef = w.omega_dot / (4.0 * w.omega);
            out.noalias() += coef * (quad * psi).eval();
        }
        return out;
    }
};

double error_norm(const Eigen::VectorXcd& err, const Eigen::VectorXcd& y0,
                  const Eigen::VectorXcd& y1, double rtol, double atol) {
    double sum = 0.0;
    for (int i = 0; i < err.size(); ++i) {
        const double scale = atol + rtol * std::max(std::abs(y0[i]), std::abs(y1[i]));
        const double r = std::abs(err[i]) / scale;
        sum += r * r;
    }
    return std::sqrt(sum / double(err.size()));
}

}  // namespace

EvolutionResult evolve(const StateVector& initial, const RampProtocol& protocol,
                       const SystemParams& params, FockCutoff cutoff,
                       const StepperConfig& config) {
    protocol.validate();
    if (!(initial.cutoff == cutoff))
        throw DimensionMismatchError("evolve: initial state does not match the cutoff");
    if (std::abs(initial.norm() - 1.0) > 1e-8)
        throw std::invalid_argument("evolve: initial state must be normalized");

    const auto even_weight = [&](const Eigen::VectorXcd& psi) {
        double w = 0.0;
        for (const auto& l : build_basis(cutoff))
            if (l.parity() > 0) w += std::norm(psi[basis_index(l)]);
        return w;
    };
    const auto top_fock = [&](const Eigen::VectorXcd& psi) {
        double w = 0.0;
        for (int q = 0; q < 4; ++q)
            w += std::norm(psi[4 * cutoff.max_photons + q]);
        return w;
    };

    EvolutionResult result{StateVector(cutoff)};
    result.even_weight_initial = even_weight(initial.amps);

    Eigen::VectorXcd psi = initial.amps;
    if (protocol.shape != RampShape::sudden) {
        const Rhs rhs(params, protocol, cutoff, config.include_drive);
        const double t_end = protocol.t0 + protocol.tau;
        double t = protocol.t0;
        double h = std::min(config.initial_step, protocol.tau / 10.0);
        Eigen::VectorXcd k1 = rhs(t, psi);
        while (t < t_end) {
            h = std::min(h, t_end - t);
            if (h < 1e-14 * std::max(1.0, std::abs(t)))
                throw StepSizeUnderflowError("evolve: step size underflow at t=" +
                                             std::to_string(t));
            const Eigen::VectorXcd k2 = rhs(t + c2 * h, psi + h * (a21 * k1));
            const Eigen::VectorXcd k3 = rhs(t + c3 * h, psi + h * (a31 * k1 + a32 * k2));
            const Eigen::VectorXcd k4 = rhs(t + c4 * h, psi + h * (a41 * k1 + a42 * k2 + a43 * k3));
            const Eigen::VectorXcd k5 =
                rhs(t + c5 * h, psi + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
            const Eigen::VectorXcd k6 =
                rhs(t + h, psi + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
            const Eigen::VectorXcd y5 =
                psi + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
            const Eigen::VectorXcd k7 = rhs(t + h, y5);
            const Eigen::VectorXcd err =
                h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);
            const double en = error_norm(err, psi, y5, config.rtol, config.atol);
            if (en <= 1.0) {
                t += h;
                psi = y5;
                k1 = k7;  // FSAL
                ++result.steps_accepted;
                result.max_top_fock = std::max(result.max_top_fock, top_fock(psi));
                if (result.max_top_fock > config.leakage_threshold)
                    throw CutoffLeakageError(
                        "evolve: cutoff_leakage, top Fock occupation " +
                        std::to_string(result.max_top_fock) + " exceeds threshold");
            } else {
                ++result.steps_rejected;
            }
            const double factor =
                std::clamp(0.9 * std::pow(std::max(en, 1e-10), -0.2), 0.2, 5.0);
            h *= factor;
        }
    }

    result.final = StateVector(cutoff, psi);
    result.norm_drift = std::abs(result.final.norm() - 1.0);
    result.even_weight_final = even_weight(psi);

    const SpectralDecomposition after =
        diagonalize(params, CavityFrequency(protocol.omega_end), cutoff);
    const int max_n = std::min(config.overlap_max_photons, cutoff.max_photons);
    for (int n = 0; n <= max_n; ++n)
        for (int q1 = 0; q1 <= 1; ++q1)
            for (int q2 = 0; q2 <= 1; ++q2) {
                const BasisLabel label{n, q1, q2};
                const DressedState dressed = identify_dressed(after, label);
                result.overlaps[label] = dressed.vector.cast<Complex>().dot(psi);
            }
    return result;
}

std::vector<ScanRow> limit_scan(const SystemParams& params, const RampProtocol& base,
                                const std::vector<double>& taus, FockCutoff cutoff,
                                const StepperConfig& config) {
    for (size_t i = 1; i < taus.size(); ++i)
        if (!(taus[i] > taus[i - 1]))
            throw std::invalid_argument("limit_scan: tau grid must be strictly increasing");

    const SpectralDecomposition before =
        diagonalize(params, CavityFrequency(base.omega_start), cutoff);
    const StateVector ground(cutoff,
                             identify_dressed(before, {0, 0, 0}).vector.cast<Complex>());

    std::vector<ScanRow> rows;
    rows.reserve(taus.size());
    for (double tau : taus) {
        RampProtocol protocol = base;
        protocol.tau = tau;
        const EvolutionResult run = evolve(ground, protocol, params, cutoff, config);
        ScanRow row;
        row.tau = tau;
        const auto prob = [&](const BasisLabel& l) { return std::norm(run.overlaps.at(l)); };
        row.p_1_10 = prob({1, 1, 0});
        row.p_1_01 = prob({1, 0, 1});
        row.p_0_11 = prob({0, 1, 1});
        row.p_2_11 = prob({2, 1, 1});
        row.p_2_00 = prob({2, 0, 0});
        row.total_excitation = 1.0 - prob({0, 0, 0});
        const auto& o = run.overlaps;
        row.c_1 = concurrence({o.at({1, 0, 0}), o.at({1, 0, 1}), o.at({1, 1, 0}), o.at({1, 1, 1})});
        row.c_2 = concurrence({o.at({2, 0, 0}), o.at({2, 0, 1}), o.at({2, 1, 0}), o.at({2, 1, 1})});
        rows.push_back(row);
    }
    return rows;
}

}  // namespace dle
