#include "qroute/generators.hpp"

#include <numbers>
#include <stdexcept>
#include <string>

namespace qroute {

namespace {

constexpr double kPi = std::numbers::pi;

void append(Circuit& c, const std::vector<Gate>& gates) {
    c.gates.insert(c.gates.end(), gates.begin(), gates.end());
}

// MAJ(x, y, z): carry-in x, operand bit y, operand bit z (holds the
// majority afterwards).
void emit_maj(Circuit& c, QubitId x, QubitId y, QubitId z) {
    c.gates.push_back(Gate::two(GateKind::CX, z, y));
    c.gates.push_back(Gate::two(GateKind::CX, z, x));
    append(c, decompose_toffoli(x, y, z));
}

// UMA(x, y, z): inverse companion of MAJ, restores x/z and leaves the sum
// on y.
void emit_uma(Circuit& c, QubitId x, QubitId y, QubitId z) {
    append(c, decompose_toffoli(x, y, z));
    c.gates.push_back(Gate::two(GateKind::CX, z, x));
    c.gates.push_back(Gate::two(GateKind::CX, x, y));
}

// Multi-controlled Z over qubits ctrl[0..k-2] with target tgt, expanded as
// H(tgt) MCX H(tgt). The MCX runs a Toffoli chain accumulating partial
// ANDs into anc[0..k-3], flips the target off the last ancilla, then
// uncomputes the chain in reverse. Requires |anc| == |ctrl| - 1 for
// |ctrl| >= 2; a single control needs no ancilla and emits H CX H.
void emit_mcz(Circuit& c, const std::vector<QubitId>& ctrl, QubitId tgt,
              const std::vector<QubitId>& anc) {
    if (ctrl.size() == 1) {
        c.gates.push_back(Gate::one(GateKind::H, tgt));
        c.gates.push_back(Gate::two(GateKind::CX, ctrl[0], tgt));
        c.gates.push_back(Gate::one(GateKind::H, tgt));
        return;
    }
    c.gates.push_back(Gate::one(GateKind::H, tgt));
    const std::size_t chain = ctrl.size() - 1;  // == anc.size()
    append(c, decompose_toffoli(ctrl[0], ctrl[1], anc[0]));
    for (std::size_t i = 1; i < chain; ++i) {
        append(c, decompose_toffoli(ctrl[i + 1], anc[i - 1], anc[i]));
    }
    c.gates.push_back(Gate::two(GateKind::CX, anc[chain - 1], tgt));
    for (std::size_t i = chain; i-- > 1;) {
        append(c, decompose_toffoli(ctrl[i + 1], anc[i - 1], anc[i]));
    }
    append(c, decompose_toffoli(ctrl[0], ctrl[1], anc[0]));
    c.gates.push_back(Gate::one(GateKind::H, tgt));
}

}  // namespace

Circuit gen_qft(std::uint32_t n) {
    if (n == 0) {
        throw std::invalid_argument("gen_qft: n must be >= 1");
    }
    Circuit c{n, "qft" + std::to_string(n), {}};
    c.gates.reserve(n + static_cast<std::size_t>(n) * (n - 1) / 2);
    for (std::uint32_t i = 0; i < n; ++i) {
        c.gates.push_back(Gate::one(GateKind::H, i));
        for (std::uint32_t j = i + 1; j < n; ++j) {
            c.gates.push_back(
                Gate::two(GateKind::CP, j, i, kPi / static_cast<double>(1ull << (j - i))));
        }
    }
    return c;
}

std::vector<Gate> decompose_toffoli(QubitId a, QubitId b, QubitId c) {
    if (a == b || a == c || b == c) {
        throw std::invalid_argument("decompose_toffoli: qubits must be distinct");
    }
    return {
        Gate::one(GateKind::H, c),
        Gate::two(GateKind::CX, b, c),
        Gate::one(GateKind::Tdg, c),
        Gate::two(GateKind::CX, a, c),
        Gate::one(GateKind::T, c),
        Gate::two(GateKind::CX, b, c),
        Gate::one(GateKind::Tdg, c),
        Gate::two(GateKind::CX, a, c),
        Gate::one(GateKind::T, b),
        Gate::one(GateKind::T, c),
        Gate::one(GateKind::H, c),
        Gate::two(GateKind::CX, a, b),
        Gate::one(GateKind::T, a),
        Gate::one(GateKind::Tdg, b),
        Gate::two(GateKind::CX, a, b),
    };
}

Circuit gen_cuccaro(std::uint32_t n_bits) {
    if (n_bits == 0) {
        throw std::invalid_argument("gen_cuccaro: n_bits must be >= 1");
    }
    const std::uint32_t n = 2 * n_bits + 2;
    Circuit c{n, "cuccaro" + std::to_string(n_bits), {}};
    const auto a_q = [](std::uint32_t i) { return 2 * i + 1; };
    const auto b_q = [](std::uint32_t i) { return 2 * i + 2; };
    const QubitId carry_in = 0;
    const QubitId carry_out = n - 1;

    emit_maj(c, carry_in, b_q(0), a_q(0));
    for (std::uint32_t i = 1; i < n_bits; ++i) {
        emit_maj(c, a_q(i - 1), b_q(i), a_q(i));
    }
    c.gates.push_back(Gate::two(GateKind::CX, a_q(n_bits - 1), carry_out));
    for (std::uint32_t i = n_bits; i-- > 1;) {
        emit_uma(c, a_q(i - 1), b_q(i), a_q(i));
    }
    emit_uma(c, carry_in, b_q(0), a_q(0));
    return c;
}

Circuit gen_grover(std::uint32_t n_data, std::uint32_t iterations) {
    if (n_data < 2) {
        throw std::invalid_argument("gen_grover: n_data must be >= 2");
    }
    const std::uint32_t n_anc = n_data > 2 ? n_data - 2 : 0;
    Circuit c{n_data + n_anc, "grover" + std::to_string(n_data), {}};

    std::vector<QubitId> ctrl(n_data - 1);
    for (std::uint32_t i = 0; i + 1 < n_data; ++i) {
        ctrl[i] = i;
    }
    const QubitId tgt = n_data - 1;
    std::vector<QubitId> anc(n_anc);
    for (std::uint32_t i = 0; i < n_anc; ++i) {
        anc[i] = n_data + i;
    }

    for (std::uint32_t q = 0; q < n_data; ++q) {
        c.gates.push_back(Gate::one(GateKind::H, q));
    }
    for (std::uint32_t it = 0; it < iterations; ++it) {
        // oracle: phase-flip the all-ones state
        emit_mcz(c, ctrl, tgt, anc);
        // diffusion: inversion about the mean
        for (std::uint32_t q = 0; q < n_data; ++q) {
            c.gates.push_back(Gate::one(GateKind::H, q));
        }
        for (std::uint32_t q = 0; q < n_data; ++q) {
            c.gates.push_back(Gate::one(GateKind::X, q));
        }
        emit_mcz(c, ctrl, tgt, anc);
        for (std::uint32_t q = 0; q < n_data; ++q) {
            c.gates.push_back(Gate::one(GateKind::X, q));
        }
        for (std::uint32_t q = 0; q < n_data; ++q) {
            c.gates.push_back(Gate::one(GateKind::H, q));
        }
    }
    return c;
}

EdgeList sample_erdos_renyi(std::uint32_t n, double p, std::uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("sample_erdos_renyi: p must be in [0, 1]");
    }
    SplitMix64 rng(seed);
    EdgeList out{n, {}};
    for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t j = i + 1; j < n; ++j) {
            if (rng.next_unit_float() < p) {
                out.edges.emplace_back(i, j);
            }
        }
    }
    return out;
}

Circuit gen_qaoa_maxcut(std::uint32_t n, double p_edge, std::uint64_t seed,
                        double gamma, double beta) {
    if (n < 2) {
        throw std::invalid_argument("gen_qaoa_maxcut: n must be >= 2");
    }
    const EdgeList graph = sample_erdos_renyi(n, p_edge, seed);
    Circuit c{n, "qaoa02_" + std::to_string(n), {}};
    for (std::uint32_t q = 0; q < n; ++q) {
        c.gates.push_back(Gate::one(GateKind::H, q));
    }
    for (const auto& [u, v] : graph.edges) {
        c.gates.push_back(Gate::two(GateKind::CX, u, v));
        c.gates.push_back(Gate::one(GateKind::RZ, v, 2.0 * gamma));
        c.gates.push_back(Gate::two(GateKind::CX, u, v));
    }
    for (std::uint32_t q = 0; q < n; ++q) {
        c.gates.push_back(Gate::one(GateKind::RX, q, 2.0 * beta));
    }
    return c;
}

}  // namespace qroute
