// Gate vocabulary and unitary construction.
//
// Two-qubit unitaries are indexed with qubits[j] occupying bit j of the
// local basis index, matching the little-endian convention of the state
// containers (qubit 0 = least significant amplitude bit).

#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qnat/common/complex_matrix.hpp"

namespace qnat::qcore {

enum class GateKind {
    X, Y, Z, H, SX, S, T, ID, SQRT_H,
    RX, RY, RZ, U1, U3,
    CNOT, CZ, SWAP, SQRT_SWAP,
    CRX, CU3, RZZ, RXX, RZX,
};

constexpr int gate_arity(GateKind k) {
    switch (k) {
        case GateKind::CNOT:
        case GateKind::CZ:
        case GateKind::SWAP:
        case GateKind::SQRT_SWAP:
        case GateKind::CRX:
        case GateKind::CU3:
        case GateKind::RZZ:
        case GateKind::RXX:
        case GateKind::RZX:
            return 2;
        default:
            return 1;
    }
}

constexpr int gate_param_count(GateKind k) {
    switch (k) {
        case GateKind::RX:
        case GateKind::RY:
        case GateKind::RZ:
        case GateKind::U1:
        case GateKind::CRX:
        case GateKind::RZZ:
        case GateKind::RXX:
        case GateKind::RZX:
            return 1;
        case GateKind::U3:
        case GateKind::CU3:
            return 3;
        default:
            return 0;
    }
}

inline std::string_view gate_name(GateKind k) {
    switch (k) {
        case GateKind::X: return "X";
        case GateKind::Y: return "Y";
        case GateKind::Z: return "Z";
        case GateKind::H: return "H";
        case GateKind::SX: return "SX";
        case GateKind::S: return "S";
        case GateKind::T: return "T";
        case GateKind::ID: return "ID";
        case GateKind::SQRT_H: return "SQRT_H";
        case GateKind::RX: return "RX";
        case GateKind::RY: return "RY";
        case GateKind::RZ: return "RZ";
        case GateKind::U1: return "U1";
        case GateKind::U3: return "U3";
        case GateKind::CNOT: return "CNOT";
        case GateKind::CZ: return "CZ";
        case GateKind::SWAP: return "SWAP";
        case GateKind::SQRT_SWAP: return "SQRT_SWAP";
        case GateKind::CRX: return "CRX";
        case GateKind::CU3: return "CU3";
        case GateKind::RZZ: return "RZZ";
        case GateKind::RXX: return "RXX";
        case GateKind::RZX: return "RZX";
    }
    return "?";
}

inline GateKind gate_from_name(std::string_view name) {
    static constexpr std::array<GateKind, 23> kinds = {
        GateKind::X, GateKind::Y, GateKind::Z, GateKind::H, GateKind::SX,
        GateKind::S, GateKind::T, GateKind::ID, GateKind::SQRT_H,
        GateKind::RX, GateKind::RY, GateKind::RZ, GateKind::U1, GateKind::U3,
        GateKind::CNOT, GateKind::CZ, GateKind::SWAP, GateKind::SQRT_SWAP,
        GateKind::CRX, GateKind::CU3, GateKind::RZZ, GateKind::RXX, GateKind::RZX,
    };
    for (GateKind k : kinds) {
        if (gate_name(k) == name) return k;
    }
    throw std::invalid_argument("unknown gate kind: " + std::string(name));
}

// A gate instance bound to qubits with concrete rotation angles (radians).
struct GateOp {
    GateKind kind;
    std::vector<int> qubits;
    std::vector<double> params;

    GateOp(GateKind k, std::vector<int> q, std::vector<double> p = {})
        : kind(k), qubits(std::move(q)), params(std::move(p)) {}

    void validate(int n_qubits) const {
        if (static_cast<int>(qubits.size()) != gate_arity(kind))
            throw std::invalid_argument(std::string("gate ") + std::string(gate_name(kind)) +
                                        ": wrong qubit count");
        if (static_cast<int>(params.size()) != gate_param_count(kind))
            throw std::invalid_argument(std::string("gate ") + std::string(gate_name(kind)) +
                                        ": wrong parameter count");
        for (int q : qubits) {
            if (q < 0 || q >= n_qubits) throw std::out_of_range("gate qubit index out of range");
        }
        if (qubits.size() == 2 && qubits[0] == qubits[1])
            throw std::invalid_argument("gate qubit indices must be distinct");
    }
};

namespace detail {

inline CMatrix u3_matrix(double theta, double phi, double lambda) {
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    CMatrix m(2, 2);
    m(0, 0) = c;
    m(0, 1) = -std::polar(s, lambda);
    m(1, 0) = std::polar(s, phi);
    m(1, 1) = std::polar(c, phi + lambda);
    return m;
}

// exp(-i angle/2 * P0 (x) P1) with P0 on local bit 0 and P1 on local bit 1.
// The Paulis square to identity, so the exponential is cos - i sin.
inline CMatrix two_pauli_rotation(const CMatrix& p0, const CMatrix& p1, double angle) {
    CMatrix pp = CMatrix::kron(p1, p0);  // bit 1 is the high bit of the local index
    CMatrix out = CMatrix::identity(4) * cplx{std::cos(angle / 2.0), 0.0};
    out += pp * cplx{0.0, -std::sin(angle / 2.0)};
    return out;
}

// Controlled 2x2 op: control on local bit 0 (qubits[0]), target on bit 1.
inline CMatrix controlled(const CMatrix& u) {
    CMatrix m = CMatrix::identity(4);
    // Basis index = control + 2*target; control=1 rows/cols are 1 and 3.
    m(1, 1) = u(0, 0);
    m(1, 3) = u(0, 1);
    m(3, 1) = u(1, 0);
    m(3, 3) = u(1, 1);
    return m;
}

}  // namespace detail

inline CMatrix gate_unitary(GateKind kind, std::span<const double> params) {
    if (static_cast<int>(params.size()) != gate_param_count(kind))
        throw std::invalid_argument("gate_unitary: wrong parameter count");
    using std::numbers::pi;
    const cplx i{0.0, 1.0};
    switch (kind) {
        case GateKind::X: return pauli_x();
        case GateKind::Y: return pauli_y();
        case GateKind::Z: return pauli_z();
        case GateKind::ID: return CMatrix::identity(2);
        case GateKind::H: {
            const double r = 1.0 / std::sqrt(2.0);
            return CMatrix(2, 2, {r, r, r, -r});
        }
        case GateKind::SX:
            return CMatrix(2, 2, {cplx{0.5, 0.5}, cplx{0.5, -0.5}, cplx{0.5, -0.5}, cplx{0.5, 0.5}});
        case GateKind::S: return CMatrix(2, 2, {1, 0, 0, i});
        case GateKind::T: return CMatrix(2, 2, {1, 0, 0, std::polar(1.0, pi / 4)});
        case GateKind::SQRT_H: {
            // H has eigenvalues +-1, so sqrt(H) = (1+i)/2 I + (1-i)/2 H.
            const double r = 1.0 / std::sqrt(2.0);
            CMatrix h(2, 2, {r, r, r, -r});
            return CMatrix::identity(2) * cplx{0.5, 0.5} + h * cplx{0.5, -0.5};
        }
        case GateKind::RX: {
            const double c = std::cos(params[0] / 2.0), s = std::sin(params[0] / 2.0);
            return CMatrix(2, 2, {c, -i * s, -i * s, c});
        }
        case GateKind::RY: {
            const double c = std::cos(params[0] / 2.0), s = std::sin(params[0] / 2.0);
            return CMatrix(2, 2, {c, -s, s, c});
        }
        case GateKind::RZ:
            return CMatrix(2, 2, {std::polar(1.0, -params[0] / 2.0), 0, 0, std::polar(1.0, params[0] / 2.0)});
        case GateKind::U1:
            return CMatrix(2, 2, {1, 0, 0, std::polar(1.0, params[0])});
        case GateKind::U3:
            return detail::u3_matrix(params[0], params[1], params[2]);
        case GateKind::CNOT:
            return detail::controlled(pauli_x());
        case GateKind::CZ:
            return detail::controlled(pauli_z());
        case GateKind::SWAP: {
            CMatrix m(4, 4);
            m(0, 0) = 1;
            m(1, 2) = 1;  // |control=1,target=0> -> |0,1>
            m(2, 1) = 1;
            m(3, 3) = 1;
            return m;
        }
        case GateKind::SQRT_SWAP: {
            CMatrix m(4, 4);
            m(0, 0) = 1;
            m(3, 3) = 1;
            m(1, 1) = cplx{0.5, 0.5};
            m(2, 2) = cplx{0.5, 0.5};
            m(1, 2) = cplx{0.5, -0.5};
            m(2, 1) = cplx{0.5, -0.5};
            return m;
        }
        case GateKind::CRX: {
            std::array<double, 1> p{params[0]};
            return detail::controlled(gate_unitary(GateKind::RX, p));
        }
        case GateKind::CU3:
            return detail::controlled(detail::u3_matrix(params[0], params[1], params[2]));
        case GateKind::RZZ:
            return detail::two_pauli_rotation(pauli_z(), pauli_z(), params[0]);
        case GateKind::RXX:
            return detail::two_pauli_rotation(pauli_x(), pauli_x(), params[0]);
        case GateKind::RZX:
            // Z on qubits[0], X on qubits[1].
            return detail::two_pauli_rotation(pauli_z(), pauli_x(), params[0]);
    }
    throw std::invalid_argument("gate_unitary: unknown kind");
}

inline CMatrix gate_unitary(const GateOp& op) {
    return gate_unitary(op.kind, op.params);
}

}  // namespace qnat::qcore
