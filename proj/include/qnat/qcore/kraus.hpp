// Kraus channels: completely positive trace-preserving maps
// rho -> sum_k O_k rho O_k^dagger with sum_k O_k^dagger O_k = I.

#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "qnat/common/complex_matrix.hpp"

namespace qnat::qcore {

struct KrausChannel {
    int n_qubits = 1;
    std::vector<CMatrix> operators;

    KrausChannel(int nq, std::vector<CMatrix> ops) : n_qubits(nq), operators(std::move(ops)) {}

    std::size_t dim() const { return std::size_t{1} << n_qubits; }

    // Deviation of sum_k O_k^dagger O_k from identity.
    double completeness_defect() const {
        CMatrix acc(dim(), dim());
        for (const auto& op : operators) acc += op.dagger() * op;
        return CMatrix::max_abs_diff(acc, CMatrix::identity(dim()));
    }

    void validate(double tol = 1e-10) const {
        if (operators.empty()) throw std::invalid_argument("KrausChannel: no operators");
        for (const auto& op : operators) {
            if (op.rows() != dim() || op.cols() != dim())
                throw std::invalid_argument("KrausChannel: operator dimension mismatch");
        }
        if (completeness_defect() > tol)
            throw std::invalid_argument("KrausChannel: completeness violated");
    }

    static KrausChannel identity(int n_qubits = 1) {
        return KrausChannel(n_qubits, {CMatrix::identity(std::size_t{1} << n_qubits)});
    }
};

inline KrausChannel bit_flip_channel(double p) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("bit_flip_channel: p out of [0,1]");
    return KrausChannel(1, {pauli_i() * cplx{std::sqrt(1.0 - p), 0.0},
                            pauli_x() * cplx{std::sqrt(p), 0.0}});
}

inline KrausChannel phase_flip_channel(double p) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("phase_flip_channel: p out of [0,1]");
    return KrausChannel(1, {pauli_i() * cplx{std::sqrt(1.0 - p), 0.0},
                            pauli_z() * cplx{std::sqrt(p), 0.0}});
}

// rho -> (1-p) rho + p I/2, realized as the uniform Pauli channel.
inline KrausChannel depolarizing_channel(double p) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("depolarizing_channel: p out of [0,1]");
    return KrausChannel(1, {pauli_i() * cplx{std::sqrt(1.0 - 3.0 * p / 4.0), 0.0},
                            pauli_x() * cplx{std::sqrt(p / 4.0), 0.0},
                            pauli_y() * cplx{std::sqrt(p / 4.0), 0.0},
                            pauli_z() * cplx{std::sqrt(p / 4.0), 0.0}});
}

inline KrausChannel amplitude_damping_channel(double gamma) {
    if (gamma < 0.0 || gamma > 1.0)
        throw std::invalid_argument("amplitude_damping_channel: gamma out of [0,1]");
    CMatrix o0(2, 2, {1, 0, 0, std::sqrt(1.0 - gamma)});
    CMatrix o1(2, 2, {0, std::sqrt(gamma), 0, 0});
    return KrausChannel(1, {o0, o1});
}

}  // namespace qnat::qcore
