#pragma once

#include <array>
#include <complex>
#include <span>
#include <string>
#include <vector>

namespace questa {

using cdouble = std::complex<double>;

enum class GateKind : int {
    Identity = 0,
    RX,
    RY,
    RZ,
    Cnot,
};

const char* gate_name(GateKind kind);
GateKind gate_kind_from_name(const std::string& name);
bool gate_is_rotation(GateKind kind);
bool gate_is_two_qubit(GateKind kind);

/// 2x2 matrix of a rotation gate, row-major.
std::array<cdouble, 4> rotation_matrix(GateKind kind, double angle);

/// Dense amplitude vector over the computational basis.
/// Basis index convention: qubit 0 is the most significant bit, so qubit q
/// maps to bit (qubits - 1 - q). CNOT wiring and Pauli placement rely on this.
struct StateVector {
    int qubits = 0;
    std::vector<cdouble> amplitudes;

    static StateVector zero_state(int qubits);

    std::size_t dim() const { return amplitudes.size(); }
    double norm_sq() const;
};

/// One Pauli word: a letter in {I,X,Y,Z} per qubit (index 0 leftmost = qubit 0)
/// and a real coefficient.
struct PauliString {
    std::string letters;
    double coefficient = 1.0;
};

/// Apply a gate out of place. Rotation gates take one wire; CNOT takes
/// (control, target). Throws RuntimeFailure on bad wires.
StateVector apply_gate(const StateVector& state, GateKind gate, double angle,
                       std::span<const int> wires);

// In-place kernels used by the simulation loops. wire1 < 0 for one-qubit gates.
void apply_gate_inplace(StateVector& state, GateKind gate, double angle, int wire0,
                        int wire1 = -1);

/// Real part of <psi| sum_k c_k P_k |psi>. Imaginary residue above 1e-10 means
/// internal inconsistency and throws.
double expectation(const StateVector& state, std::span<const PauliString> observable);

/// <Z_q> fast path.
double z_expectation(const StateVector& state, int qubit);

/// |<a|b>|^2 clamped to [0,1].
double fidelity(const StateVector& a, const StateVector& b);

struct CompiledCircuit;

/// Full 2^n x 2^n matrix of a compiled circuit, row-major. Built from dense
/// per-gate embeddings and matrix products, independent of the in-place
/// kernels; intended as the equivalence oracle. Guarded to n <= 10.
std::vector<cdouble> full_unitary(const CompiledCircuit& circuit,
                                  std::span<const double> params,
                                  std::span<const double> features);

}  // namespace questa
