#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "qroute/circuit.hpp"

namespace qroute {

/// SplitMix64. Chosen because it is trivially reproducible bit-for-bit on
/// any platform, which pins down the random-graph benchmarks.
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1), 53 mantissa bits.
    double next_unit_float() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }
};

/// Simple undirected graph as a sorted (u, v) edge list with u < v.
struct EdgeList {
    std::uint32_t n = 0;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
};

/// Quantum Fourier transform on n qubits without the final qubit-reversal
/// swaps: for each i, H(i) followed by CP(pi / 2^(j-i)) with control j,
/// target i for j > i. Gate count n + n(n-1)/2.
Circuit gen_qft(std::uint32_t n);

/// Standard 15-gate Clifford+T decomposition of the Toffoli gate with
/// controls a, b and target c: 6 CX, 2 H, 7 T/Tdg.
std::vector<Gate> decompose_toffoli(QubitId a, QubitId b, QubitId c);

/// Cuccaro ripple-carry adder on 2*n_bits + 2 qubits, fully decomposed to
/// 1- and 2-qubit gates. Register layout interleaves the operands so the
/// ripple chain runs over neighboring indices: carry-in at 0, a_i at 2i+1,
/// b_i at 2i+2, carry-out at 2*n_bits+1.
Circuit gen_cuccaro(std::uint32_t n_bits);

/// Grover main routine on n_data data qubits plus max(0, n_data - 2)
/// ancillas: initial H layer, then per iteration an oracle marking the
/// all-ones state (multi-controlled Z) and the standard diffusion operator.
/// Multi-controlled gates are expanded through an ancilla chain of
/// Toffolis, themselves decomposed to 1- and 2-qubit gates.
Circuit gen_grover(std::uint32_t n_data, std::uint32_t iterations = 1);

/// G(n, p) sample: pairs (i, j), i < j, visited in lexicographic order,
/// each kept when the next SplitMix64 unit float is < p.
EdgeList sample_erdos_renyi(std::uint32_t n, double p, std::uint64_t seed);

/// One QAOA MaxCut layer over a sampled Erdos-Renyi graph: H on all qubits,
/// then CX(u,v) RZ(2*gamma)(v) CX(u,v) per edge, then RX(2*beta) on all
/// qubits. The angles do not affect routing or any overhead metric.
Circuit gen_qaoa_maxcut(std::uint32_t n, double p_edge, std::uint64_t seed,
                        double gamma = 0.7, double beta = 0.3);

}  // namespace qroute
