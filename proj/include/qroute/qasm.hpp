#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "qroute/circuit.hpp"

namespace qroute {

/// Positioned parse failure. line/col are 1-based.
class QasmError : public std::runtime_error {
public:
    QasmError(int line, int col, const std::string& message)
        : std::runtime_error(std::to_string(line) + ":" + std::to_string(col) +
                             ": " + message),
          line_(line),
          col_(col) {}

    int line() const { return line_; }
    int col() const { return col_; }

private:
    int line_;
    int col_;
};

/// Parses the supported OpenQASM 2.0 subset: one qreg, gates h, x, t, tdg,
/// rz, rx, cx, cp (cu1 is an alias), swap, and ccx (expanded to the
/// standard Toffoli decomposition). `include "qelib1.inc";` is accepted and
/// ignored; barrier, creg, and measure statements are dropped. A `// routing`
/// comment line marks the following swap as a routing SWAP.
Circuit parse_qasm(std::string_view text);

Circuit parse_qasm_file(const std::string& path);

/// Serializes back to the same subset; routing SWAPs are preceded by a
/// `// routing` line, angles are printed with 17 significant digits so they
/// survive a round trip bit-exactly.
std::string emit_qasm(const Circuit& c);

void write_qasm_file(const Circuit& c, const std::string& path);

}  // namespace qroute
