#include "qroute/circuit.hpp"

#include <cmath>

namespace qroute {

int gate_arity(GateKind kind) {
    switch (kind) {
        case GateKind::CX:
        case GateKind::CP:
        case GateKind::Swap:
            return 2;
        default:
            return 1;
    }
}

bool gate_has_angle(GateKind kind) {
    return kind == GateKind::RZ || kind == GateKind::RX || kind == GateKind::CP;
}

const char* gate_name(GateKind kind) {
    switch (kind) {
        case GateKind::H: return "h";
        case GateKind::X: return "x";
        case GateKind::T: return "t";
        case GateKind::Tdg: return "tdg";
        case GateKind::RZ: return "rz";
        case GateKind::RX: return "rx";
        case GateKind::CX: return "cx";
        case GateKind::CP: return "cp";
        case GateKind::Swap: return "swap";
    }
    return "?";
}

Gate Gate::one(GateKind kind, QubitId q, double angle) {
    return Gate{kind, q, 0, angle, false};
}

Gate Gate::two(GateKind kind, QubitId a, QubitId b, double angle) {
    return Gate{kind, a, b, angle, false};
}

Gate Gate::routing_swap(QubitId a, QubitId b) {
    return Gate{GateKind::Swap, a, b, 0.0, true};
}

OpCounts& OpCounts::operator+=(const OpCounts& o) {
    n_ops += o.n_ops;
    n_swap += o.n_swap;
    n_1q += o.n_1q;
    n_2q += o.n_2q;
    return *this;
}

std::vector<std::string> validate_circuit(const Circuit& c) {
    std::vector<std::string> violations;
    if (c.num_qubits == 0) {
        violations.push_back("num_qubits must be positive");
    }
    for (std::size_t i = 0; i < c.gates.size(); ++i) {
        const Gate& g = c.gates[i];
        const std::string at = " at gate " + std::to_string(i);
        if (g.q0 >= c.num_qubits || (g.arity() == 2 && g.q1 >= c.num_qubits)) {
            violations.push_back("qubit index out of range" + at);
        }
        if (g.arity() == 2 && g.q0 == g.q1) {
            violations.push_back("duplicate qubit" + at);
        }
        if (g.is_routing && g.kind != GateKind::Swap) {
            violations.push_back("routing flag on non-swap gate" + at);
        }
        if (gate_has_angle(g.kind) && !std::isfinite(g.angle)) {
            violations.push_back("non-finite angle" + at);
        }
    }
    return violations;
}

OpCounts count_ops(std::span<const Gate> gates) {
    OpCounts counts;
    for (const Gate& g : gates) {
        if (g.is_routing) {
            ++counts.n_swap;
        } else {
            ++counts.n_ops;
            if (g.arity() == 1) {
                ++counts.n_1q;
            } else {
                ++counts.n_2q;
            }
        }
    }
    return counts;
}

OpCounts count_ops(const Circuit& c) {
    return count_ops(std::span<const Gate>(c.gates));
}

bool circuits_equal(const Circuit& a, const Circuit& b, double angle_tol) {
    if (a.num_qubits != b.num_qubits || a.gates.size() != b.gates.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.gates.size(); ++i) {
        const Gate& x = a.gates[i];
        const Gate& y = b.gates[i];
        if (x.kind != y.kind || x.q0 != y.q0 || x.is_routing != y.is_routing) {
            return false;
        }
        if (x.arity() == 2 && x.q1 != y.q1) {
            return false;
        }
        if (std::abs(x.angle - y.angle) > angle_tol) {
            return false;
        }
    }
    return true;
}

}  // namespace qroute
