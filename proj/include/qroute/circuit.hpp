#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace qroute {

/// Zero-based qubit index. Whether it names a logical or a physical qubit
/// depends on context: circuits from the generators and the parser are
/// logical, routed circuits are physical.
using QubitId = std::uint32_t;

enum class GateKind : std::uint8_t { H, X, T, Tdg, RZ, RX, CX, CP, Swap };

/// 1 for H, X, T, Tdg, RZ, RX; 2 for CX, CP, Swap.
int gate_arity(GateKind kind);

/// True for the parameterized kinds RZ, RX, CP.
bool gate_has_angle(GateKind kind);

/// OpenQASM mnemonic ("h", "tdg", "cx", ...).
const char* gate_name(GateKind kind);

struct Gate {
    GateKind kind = GateKind::H;
    QubitId q0 = 0;
    QubitId q1 = 0;        // meaningful only when arity is 2
    double angle = 0.0;    // radians, meaningful only for RZ/RX/CP
    bool is_routing = false;

    static Gate one(GateKind kind, QubitId q, double angle = 0.0);
    static Gate two(GateKind kind, QubitId a, QubitId b, double angle = 0.0);
    static Gate routing_swap(QubitId a, QubitId b);

    int arity() const { return gate_arity(kind); }
    bool operator==(const Gate&) const = default;
};

/// An ordered gate list over qubits [0, num_qubits). Gate order is execution
/// order; the dependency DAG is implied by shared qubits.
struct Circuit {
    std::uint32_t num_qubits = 0;
    std::string name;
    std::vector<Gate> gates;
};

struct OpCounts {
    std::uint64_t n_ops = 0;   // computation gates (is_routing == false)
    std::uint64_t n_swap = 0;  // routing SWAPs
    std::uint64_t n_1q = 0;
    std::uint64_t n_2q = 0;    // two-qubit computation gates

    OpCounts& operator+=(const OpCounts& o);
    bool operator==(const OpCounts&) const = default;
};

/// Checks every Circuit invariant. Returns one message per violation,
/// each naming the offending gate index; empty result means the circuit
/// is valid.
std::vector<std::string> validate_circuit(const Circuit& c);

OpCounts count_ops(std::span<const Gate> gates);
OpCounts count_ops(const Circuit& c);

/// Gate-for-gate equality with angles compared to |da| <= tol.
bool circuits_equal(const Circuit& a, const Circuit& b, double angle_tol = 0.0);

}  // namespace qroute
