// Exact n-qubit pure-state simulation.
//
// Amplitude index convention is little-endian: bit q of the index holds the
// computational-basis value of qubit q.

#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "qnat/common/complex_matrix.hpp"
#include "qnat/common/rng.hpp"
#include "qnat/qcore/gates.hpp"

namespace qnat::qcore {

class StateVector {
  public:
    explicit StateVector(int n_qubits)
        : n_qubits_(n_qubits), amps_(std::size_t{1} << n_qubits, cplx{0.0, 0.0}) {
        if (n_qubits < 1 || n_qubits > 16)
            throw std::invalid_argument("StateVector: qubit count must be in [1, 16]");
        amps_[0] = 1.0;
    }

    static StateVector basis(int n_qubits, std::size_t index) {
        StateVector s(n_qubits);
        if (index >= s.dim()) throw std::out_of_range("StateVector: basis index out of range");
        s.amps_[0] = 0.0;
        s.amps_[index] = 1.0;
        return s;
    }

    static StateVector from_amplitudes(int n_qubits, std::vector<cplx> amps) {
        StateVector s(n_qubits);
        if (amps.size() != s.dim())
            throw std::invalid_argument("StateVector: amplitude count must be 2^n");
        s.amps_ = std::move(amps);
        if (std::abs(s.norm() - 1.0) > 1e-10)
            throw std::invalid_argument("StateVector: amplitudes not normalized");
        return s;
    }

    int n_qubits() const { return n_qubits_; }
    std::size_t dim() const { return amps_.size(); }
    std::span<const cplx> amplitudes() const { return amps_; }

    double norm() const {
        double s = 0.0;
        for (const auto& a : amps_) s += std::norm(a);
        return std::sqrt(s);
    }

    // In-place gate application.
    void apply(const GateOp& gate) {
        gate.validate(n_qubits_);
        const CMatrix u = gate_unitary(gate);
        if (gate.qubits.size() == 1) {
            apply_1q(u, gate.qubits[0]);
        } else {
            apply_2q(u, gate.qubits[0], gate.qubits[1]);
        }
    }

    void apply_all(std::span<const GateOp> gates) {
        for (const auto& g : gates) apply(g);
    }

    double probability_of_one(int qubit) const {
        check_qubit(qubit);
        const std::size_t bit = std::size_t{1} << qubit;
        double p1 = 0.0;
        for (std::size_t i = 0; i < amps_.size(); ++i) {
            if (i & bit) p1 += std::norm(amps_[i]);
        }
        return p1;
    }

    // tr(Z rho) for this pure state: (+1) P(0) + (-1) P(1).
    double expectation_z(int qubit) const { return 1.0 - 2.0 * probability_of_one(qubit); }

  private:
    void check_qubit(int q) const {
        if (q < 0 || q >= n_qubits_) throw std::out_of_range("qubit index out of range");
    }

    void apply_1q(const CMatrix& u, int q) {
        const std::size_t bit = std::size_t{1} << q;
        for (std::size_t i = 0; i < amps_.size(); ++i) {
            if (i & bit) continue;
            const cplx a0 = amps_[i];
            const cplx a1 = amps_[i | bit];
            amps_[i] = u(0, 0) * a0 + u(0, 1) * a1;
            amps_[i | bit] = u(1, 0) * a0 + u(1, 1) * a1;
        }
    }

    void apply_2q(const CMatrix& u, int q0, int q1) {
        const std::size_t b0 = std::size_t{1} << q0;
        const std::size_t b1 = std::size_t{1} << q1;
        for (std::size_t i = 0; i < amps_.size(); ++i) {
            if (i & (b0 | b1)) continue;
            // Local index packs qubits[0] into bit 0, qubits[1] into bit 1.
            const std::size_t idx[4] = {i, i | b0, i | b1, i | b0 | b1};
            cplx in[4], out[4];
            for (int k = 0; k < 4; ++k) in[k] = amps_[idx[k]];
            for (int r = 0; r < 4; ++r) {
                out[r] = u(r, 0) * in[0] + u(r, 1) * in[1] + u(r, 2) * in[2] + u(r, 3) * in[3];
            }
            for (int k = 0; k < 4; ++k) amps_[idx[k]] = out[k];
        }
    }

    int n_qubits_;
    std::vector<cplx> amps_;
};

// Pure-function form: returns the evolved copy.
inline StateVector apply_gate(const StateVector& state, const GateOp& gate) {
    StateVector out = state;
    out.apply(gate);
    return out;
}

// Empirical mean of `shots` +-1 measurement draws on one qubit.
inline double sample_shots(const StateVector& state, int qubit, long shots, Rng& rng) {
    if (shots < 1) throw std::invalid_argument("sample_shots: shots must be >= 1");
    const double p_plus = (1.0 + state.expectation_z(qubit)) / 2.0;
    long plus = 0;
    for (long s = 0; s < shots; ++s) {
        if (rng.uniform01() <= p_plus) ++plus;
    }
    return (2.0 * static_cast<double>(plus)) / static_cast<double>(shots) - 1.0;
}

}  // namespace qnat::qcore
