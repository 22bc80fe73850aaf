#include "dle/hilbert.hpp"

#include <cmath>

namespace dle {

std::vector<BasisLabel> build_basis(FockCutoff cutoff) {
    std::vector<BasisLabel> labels;
    labels.reserve(cutoff.dimension());
    for (int n = 0; n <= cutoff.max_photons; ++n)
        for (int q1 = 0; q1 <= 1; ++q1)
            for (int q2 = 0; q2 <= 1; ++q2) labels.push_back({n, q1, q2});
    return labels;
}

namespace {

void check_qubit(int qubit) {
    if (qubit != 1 && qubit != 2)
        throw std::invalid_argument("qubit index must be 1 or 2, got " + std::to_string(qubit));
}

}  // namespace

OperatorMatrix annihilation_op(FockCutoff cutoff) {
    OperatorMatrix op(cutoff);
    for (const auto& l : build_basis(cutoff)) {
        if (l.n >= 1) op.at({l.n - 1, l.q1, l.q2}, l) = std::sqrt(double(l.n));
    }
    return op;
}

OperatorMatrix creation_op(FockCutoff cutoff) {
    OperatorMatrix op(cutoff);
    for (const auto& l : build_basis(cutoff)) {
        if (l.n + 1 <= cutoff.max_photons)
            op.at({l.n + 1, l.q1, l.q2}, l) = std::sqrt(double(l.n + 1));
    }
    return op;
}

OperatorMatrix sigma_plus_op(int qubit, FockCutoff cutoff) {
    check_qubit(qubit);
    OperatorMatrix op(cutoff);
    for (const auto& l : build_basis(cutoff)) {
        int q = qubit == 1 ? l.q1 : l.q2;
        if (q == 0) {
            BasisLabel to = l;
            (qubit == 1 ? to.q1 : to.q2) = 1;
            op.at(to, l) = 1.0;
        }
    }
    return op;
}

OperatorMatrix sigma_minus_op(int qubit, FockCutoff cutoff) {
    return sigma_plus_op(qubit, cutoff).adjoint();
}

OperatorMatrix sigma3_op(int qubit, FockCutoff cutoff) {
    check_qubit(qubit);
    OperatorMatrix op(cutoff);
    for (const auto& l : build_basis(cutoff)) {
        int q = qubit == 1 ? l.q1 : l.q2;
        op.at(l, l) = double(2 * q - 1);
    }
    return op;
}

OperatorMatrix identity_op(FockCutoff cutoff) {
    return {cutoff, Eigen::MatrixXcd::Identity(cutoff.dimension(), cutoff.dimension())};
}

OperatorMatrix swap_op(FockCutoff cutoff) {
    OperatorMatrix op(cutoff);
    for (const auto& l : build_basis(cutoff)) op.at(l.swapped(), l) = 1.0;
    return op;
}

OperatorMatrix parity_op(FockCutoff cutoff) {
    OperatorMatrix op(cutoff);
    for (const auto& l : build_basis(cutoff)) op.at(l, l) = double(l.parity());
    return op;
}

OperatorMatrix build_operator(OperatorKind kind, FockCutoff cutoff, int qubit) {
    switch (kind) {
        case OperatorKind::annihilate: return annihilation_op(cutoff);
        case OperatorKind::create: return creation_op(cutoff);
        case OperatorKind::sigma_plus: return sigma_plus_op(qubit, cutoff);
        case OperatorKind::sigma_minus: return sigma_minus_op(qubit, cutoff);
        case OperatorKind::sigma3: return sigma3_op(qubit, cutoff);
        case OperatorKind::identity: return identity_op(cutoff);
    }
    throw std::invalid_argument("unknown operator kind");
}

}  // namespace dle
