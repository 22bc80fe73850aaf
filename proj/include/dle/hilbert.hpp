#pragma once

#include <Eigen/Dense>
#include <complex>
#include <compare>
#include <vector>

#include "dle/errors.hpp"

namespace dle {

using Complex = std::complex<double>;

/// Maximum retained photon number N. The composite space
/// (qubit x qubit x Fock) then has dimension 4(N+1).
struct FockCutoff {
    int max_photons = 0;

    explicit FockCutoff(int n) : max_photons(n) {
        if (n < 0) throw std::invalid_argument("FockCutoff: max_photons must be >= 0");
    }
    int dimension() const { return 4 * (max_photons + 1); }
    bool operator==(const FockCutoff&) const = default;
};

/// Basis ket |n; q1 q2>: photon number plus the two qubit occupation bits.
struct BasisLabel {
    int n = 0;
    int q1 = 0;
    int q2 = 0;

    auto operator<=>(const BasisLabel&) const = default;

    int excitations() const { return n + q1 + q2; }
    /// (-1)^(n+q1+q2), conserved by both the interaction and the drive.
    int parity() const { return excitations() % 2 == 0 ? 1 : -1; }
    BasisLabel swapped() const { return {n, q2, q1}; }
};

// Canonical order is photon-major with (q1,q2) lexicographic, so a fixed
// photon sector is a contiguous slice of four amplitudes.
inline int basis_index(const BasisLabel& l) { return 4 * l.n + 2 * l.q1 + l.q2; }
inline BasisLabel basis_label(int index) {
    return {index / 4, (index / 2) % 2, index % 2};
}

std::vector<BasisLabel> build_basis(FockCutoff cutoff);

/// Complex amplitudes over the canonical basis.
struct StateVector {
    FockCutoff cutoff;
    Eigen::VectorXcd amps;

    explicit StateVector(FockCutoff c) : cutoff(c), amps(Eigen::VectorXcd::Zero(c.dimension())) {}
    StateVector(FockCutoff c, Eigen::VectorXcd v) : cutoff(c), amps(std::move(v)) {
        if (amps.size() != cutoff.dimension())
            throw DimensionMismatchError("StateVector: amplitude count does not match cutoff");
    }

    Complex& operator[](const BasisLabel& l) { return amps[basis_index(l)]; }
    Complex operator[](const BasisLabel& l) const { return amps[basis_index(l)]; }
    double norm() const { return amps.norm(); }

    static StateVector unit(FockCutoff c, const BasisLabel& l) {
        StateVector s(c);
        s[l] = 1.0;
        return s;
    }
};

/// Dense operator over the canonical basis, tagged with its cutoff so that
/// mixed-dimension arithmetic is rejected instead of silently broadcast.
struct OperatorMatrix {
    FockCutoff cutoff;
    Eigen::MatrixXcd mat;

    explicit OperatorMatrix(FockCutoff c)
        : cutoff(c), mat(Eigen::MatrixXcd::Zero(c.dimension(), c.dimension())) {}
    OperatorMatrix(FockCutoff c, Eigen::MatrixXcd m) : cutoff(c), mat(std::move(m)) {
        if (mat.rows() != cutoff.dimension() || mat.cols() != cutoff.dimension())
            throw DimensionMismatchError("OperatorMatrix: matrix shape does not match cutoff");
    }

    Complex& at(const BasisLabel& row, const BasisLabel& col) {
        return mat(basis_index(row), basis_index(col));
    }
    Complex at(const BasisLabel& row, const BasisLabel& col) const {
        return mat(basis_index(row), basis_index(col));
    }

    OperatorMatrix adjoint() const { return {cutoff, mat.adjoint()}; }
    bool is_hermitian(double tol = 1e-12) const {
        return (mat - mat.adjoint()).cwiseAbs().maxCoeff() <= tol;
    }

    StateVector apply(const StateVector& s) const {
        check_same(s.cutoff);
        return {cutoff, mat * s.amps};
    }

    void check_same(FockCutoff other) const {
        if (!(other == cutoff))
            throw DimensionMismatchError("OperatorMatrix: operands have different cutoffs");
    }
};

inline OperatorMatrix operator+(const OperatorMatrix& a, const OperatorMatrix& b) {
    a.check_same(b.cutoff);
    return {a.cutoff, a.mat + b.mat};
}
inline OperatorMatrix operator-(const OperatorMatrix& a, const OperatorMatrix& b) {
    a.check_same(b.cutoff);
    return {a.cutoff, a.mat - b.mat};
}
inline OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b) {
    a.check_same(b.cutoff);
    return {a.cutoff, a.mat * b.mat};
}
inline OperatorMatrix operator*(Complex s, const OperatorMatrix& a) { return {a.cutoff, s * a.mat}; }
inline OperatorMatrix operator*(double s, const OperatorMatrix& a) {
    return {a.cutoff, Complex(s) * a.mat};
}

enum class OperatorKind { annihilate, create, sigma_plus, sigma_minus, sigma3, identity };

/// Elementary operator tensored with identity on the other factors.
/// `qubit` selects j in {1,2} for the sigma kinds and is ignored otherwise.
OperatorMatrix build_operator(OperatorKind kind, FockCutoff cutoff, int qubit = 0);

OperatorMatrix annihilation_op(FockCutoff cutoff);
OperatorMatrix creation_op(FockCutoff cutoff);
OperatorMatrix sigma_plus_op(int qubit, FockCutoff cutoff);
OperatorMatrix sigma_minus_op(int qubit, FockCutoff cutoff);
OperatorMatrix sigma3_op(int qubit, FockCutoff cutoff);
OperatorMatrix identity_op(FockCutoff cutoff);

/// Swap of the two qubit factors (S^2 = 1).
OperatorMatrix swap_op(FockCutoff cutoff);
/// Diagonal (-1)^(n+q1+q2).
OperatorMatrix parity_op(FockCutoff cutoff);

}  // namespace dle
