#include "qroute/qasm.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>

#include "qroute/generators.hpp"

namespace qroute {

namespace {

enum class Tok { Ident, Number, String, Punct, Arrow, End };

struct Token {
    Tok type = Tok::End;
    std::string text;
    int line = 1;
    int col = 1;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    Token next() {
        skip_blanks();
        Token t;
        t.line = line_;
        t.col = col_;
        if (pos_ >= src_.size()) {
            return t;
        }
        const char c = src_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            t.type = Tok::Ident;
            while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
                                          src_[pos_] == '_')) {
                t.text += take();
            }
            return t;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            t.type = Tok::Number;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                t.text += take();
            }
            if (pos_ < src_.size() && src_[pos_] == '.') {
                t.text += take();
                while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                    t.text += take();
                }
            }
            if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
                std::size_t mark = pos_;
                std::string exp;
                exp += take();
                if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) {
                    exp += take();
                }
                if (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                    while (pos_ < src_.size() &&
                           std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                        exp += take();
                    }
                    t.text += exp;
                } else {
                    rewind(mark);  // lone 'e' belongs to the next token
                }
            }
            return t;
        }
        if (c == '"') {
            t.type = Tok::String;
            take();
            while (pos_ < src_.size() && src_[pos_] != '"' && src_[pos_] != '\n') {
                t.text += take();
            }
            if (pos_ >= src_.size() || src_[pos_] != '"') {
                throw QasmError(t.line, t.col, "unterminated string literal");
            }
            take();
            return t;
        }
        if (c == '-' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
            t.type = Tok::Arrow;
            t.text = "->";
            take();
            take();
            return t;
        }
        t.type = Tok::Punct;
        t.text = take();
        return t;
    }

    /// A `// routing` comment was seen since the last call; the flag clears
    /// on read.
    bool take_routing_marker() {
        const bool seen = routing_marker_;
        routing_marker_ = false;
        return seen;
    }

private:
    char take() {
        const char c = src_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    void rewind(std::size_t mark) {
        while (pos_ > mark) {
            --pos_;
            if (src_[pos_] == '\n') {
                --line_;
                col_ = 1;  // approximate; only reachable inside one line anyway
            } else {
                --col_;
            }
        }
    }

    void skip_blanks() {
        while (pos_ < src_.size()) {
            const char c = src_[pos_];
            if (std::isspace(static_cast<unsigned char>(c))) {
                take();
            } else if (c == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '/') {
                std::string body;
                while (pos_ < src_.size() && src_[pos_] != '\n') {
                    body += take();
                }
                // body includes the leading "//"
                std::size_t b = 2;
                while (b < body.size() && std::isspace(static_cast<unsigned char>(body[b]))) {
                    ++b;
                }
                std::size_t e = body.size();
                while (e > b && std::isspace(static_cast<unsigned char>(body[e - 1]))) {
                    --e;
                }
                if (body.substr(b, e - b) == "routing") {
                    routing_marker_ = true;
                }
            } else {
                break;
            }
        }
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
    bool routing_marker_ = false;
};

struct GateSpec {
    GateKind kind;
    int arity;
    bool parameterized;
};

std::optional<GateSpec> lookup_gate(const std::string& name) {
    if (name == "h") return GateSpec{GateKind::H, 1, false};
    if (name == "x") return GateSpec{GateKind::X, 1, false};
    if (name == "t") return GateSpec{GateKind::T, 1, false};
    if (name == "tdg") return GateSpec{GateKind::Tdg, 1, false};
    if (name == "rz") return GateSpec{GateKind::RZ, 1, true};
    if (name == "rx") return GateSpec{GateKind::RX, 1, true};
    if (name == "cx") return GateSpec{GateKind::CX, 2, false};
    if (name == "cp" || name == "cu1") return GateSpec{GateKind::CP, 2, true};
    if (name == "swap") return GateSpec{GateKind::Swap, 2, false};
    return std::nullopt;
}

class Parser {
public:
    explicit Parser(std::string_view src) : lex_(src) { advance(); }

    Circuit parse() {
        expect_ident("OPENQASM");
        const Token ver = cur_;
        expect(Tok::Number, "version number");
        if (ver.text != "2.0") {
            throw QasmError(ver.line, ver.col, "unsupported version: " + ver.text +
                                                   " (only 2.0 is supported)");
        }
        expect_punct(";");

        while (cur_.type != Tok::End) {
            statement();
        }
        if (qreg_size_ < 0) {
            throw QasmError(cur_.line, cur_.col, "missing qreg declaration");
        }
        circuit_.num_qubits = static_cast<std::uint32_t>(qreg_size_);
        return std::move(circuit_);
    }

private:
    void advance() {
        pending_routing_ = pending_routing_ || lex_.take_routing_marker();
        cur_ = lex_.next();
        pending_routing_ = pending_routing_ || lex_.take_routing_marker();
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw QasmError(cur_.line, cur_.col, msg);
    }

    void expect(Tok type, const std::string& what) {
        if (cur_.type != type) {
            fail("expected " + what);
        }
        advance();
    }

    void expect_punct(const std::string& p) {
        if (cur_.type != Tok::Punct || cur_.text != p) {
            fail("expected '" + p + "'");
        }
        advance();
    }

    void expect_ident(const std::string& name) {
        if (cur_.type != Tok::Ident || cur_.text != name) {
            fail("expected '" + name + "'");
        }
        advance();
    }

    bool accept_punct(const std::string& p) {
        if (cur_.type == Tok::Punct && cur_.text == p) {
            advance();
            return true;
        }
        return false;
    }

    std::uint32_t parse_index() {
        if (cur_.type != Tok::Number) {
            fail("expected index");
        }
        for (char c : cur_.text) {
            if (!std::isdigit(static_cast<unsigned char>(c))) {
                fail("index must be a non-negative integer");
            }
        }
        if (cur_.text.size() > 9) {
            fail("index out of range");
        }
        const unsigned long v = std::strtoul(cur_.text.c_str(), nullptr, 10);
        advance();
        return static_cast<std::uint32_t>(v);
    }

    // qubit operand: declared-register '[' index ']'
    std::uint32_t qubit_ref() {
        const Token name = cur_;
        expect(Tok::Ident, "qubit reference");
        if (qreg_size_ < 0 || name.text != qreg_name_) {
            throw QasmError(name.line, name.col, "undeclared qubit register: " + name.text);
        }
        expect_punct("[");
        const Token idx_tok = cur_;
        const std::uint32_t idx = parse_index();
        if (idx >= static_cast<std::uint32_t>(qreg_size_)) {
            throw QasmError(idx_tok.line, idx_tok.col,
                            "qubit index " + std::to_string(idx) + " out of range for " +
                                qreg_name_ + "[" + std::to_string(qreg_size_) + "]");
        }
        expect_punct("]");
        return idx;
    }

    // classical or quantum reference for barrier/measure; dropped
    void any_ref() {
        expect(Tok::Ident, "register reference");
        if (accept_punct("[")) {
            parse_index();
            expect_punct("]");
        }
    }

    double parse_number() {
        const Token t = cur_;
        expect(Tok::Number, "number");
        return std::strtod(t.text.c_str(), nullptr);
    }

    // angle := '-'? (NUMBER ('*' 'pi' ('/' NUMBER)?)? | 'pi' ('/' NUMBER)?)
    double parse_angle() {
        double sign = 1.0;
        if (accept_punct("-")) {
            sign = -1.0;
        }
        double value = 0.0;
        if (cur_.type == Tok::Number) {
            value = parse_number();
            if (accept_punct("*")) {
                expect_ident("pi");
                value *= std::numbers::pi;
                if (accept_punct("/")) {
                    value /= parse_number();
                }
            }
        } else if (cur_.type == Tok::Ident && cur_.text == "pi") {
            advance();
            value = std::numbers::pi;
            if (accept_punct("/")) {
                value /= parse_number();
            }
        } else {
            fail("expected angle expression");
        }
        return sign * value;
    }

    void statement() {
        const bool routing = pending_routing_;
        pending_routing_ = false;
        const Token head = cur_;
        if (head.type != Tok::Ident) {
            fail("expected statement");
        }

        if (head.text == "include") {
            advance();
            const Token file = cur_;
            expect(Tok::String, "include file name");
            if (file.text != "qelib1.inc") {
                throw QasmError(file.line, file.col, "unsupported include: " + file.text);
            }
            expect_punct(";");
            return;
        }
        if (head.text == "qreg") {
            advance();
            if (qreg_size_ >= 0) {
                throw QasmError(head.line, head.col, "duplicate qreg declaration");
            }
            const Token name = cur_;
            expect(Tok::Ident, "register name");
            expect_punct("[");
            const Token size_tok = cur_;
            const std::uint32_t size = parse_index();
            if (size == 0) {
                throw QasmError(size_tok.line, size_tok.col, "qreg size must be positive");
            }
            expect_punct("]");
            expect_punct(";");
            qreg_name_ = name.text;
            qreg_size_ = static_cast<long>(size);
            circuit_.name = name.text;
            return;
        }
        if (head.text == "creg") {
            advance();
            expect(Tok::Ident, "register name");
            expect_punct("[");
            parse_index();
            expect_punct("]");
            expect_punct(";");
            return;
        }
        if (head.text == "barrier") {
            advance();
            any_ref();
            while (accept_punct(",")) {
                any_ref();
            }
            expect_punct(";");
            return;
        }
        if (head.text == "measure") {
            advance();
            any_ref();
            if (cur_.type != Tok::Arrow) {
                fail("expected '->'");
            }
            advance();
            any_ref();
            expect_punct(";");
            return;
        }

        gate_statement(head, routing);
    }

    void gate_statement(const Token& head, bool routing) {
        if (qreg_size_ < 0) {
            throw QasmError(head.line, head.col, "gate statement before qreg declaration");
        }
        const std::string& name = head.text;
        if (name == "ccx") {
            advance();
            const std::uint32_t a = qubit_ref();
            expect_punct(",");
            const std::uint32_t b = qubit_ref();
            expect_punct(",");
            const std::uint32_t c = qubit_ref();
            expect_punct(";");
            if (a == b || a == c || b == c) {
                throw QasmError(head.line, head.col, "duplicate qubit operand");
            }
            const auto expansion = decompose_toffoli(a, b, c);
            circuit_.gates.insert(circuit_.gates.end(), expansion.begin(), expansion.end());
            return;
        }
        const auto spec = lookup_gate(name);
        if (!spec) {
            throw QasmError(head.line, head.col, "unsupported gate: " + name);
        }
        advance();
        double angle = 0.0;
        if (spec->parameterized) {
            if (!accept_punct("(")) {
                fail("expected '(' (gate " + name + " takes an angle)");
            }
            angle = parse_angle();
            expect_punct(")");
        } else if (cur_.type == Tok::Punct && cur_.text == "(") {
            throw QasmError(head.line, head.col, "gate " + name + " takes no parameter");
        }

        const std::uint32_t q0 = qubit_ref();
        Gate g;
        if (spec->arity == 1) {
            g = Gate::one(spec->kind, q0, angle);
        } else {
            expect_punct(",");
            const Token second = cur_;
            const std::uint32_t q1 = qubit_ref();
            if (q0 == q1) {
                throw QasmError(second.line, second.col, "duplicate qubit operand");
            }
            g = Gate::two(spec->kind, q0, q1, angle);
        }
        expect_punct(";");
        if (routing && g.kind == GateKind::Swap) {
            g.is_routing = true;
        }
        circuit_.gates.push_back(g);
    }

    Lexer lex_;
    Token cur_;
    bool pending_routing_ = false;
    Circuit circuit_;
    std::string qreg_name_;
    long qreg_size_ = -1;
};

std::string fmt_angle(double a) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", a);
    return buf;
}

}  // namespace

Circuit parse_qasm(std::string_view text) {
    return Parser(text).parse();
}

Circuit parse_qasm_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    Circuit c = parse_qasm(buf.str());
    return c;
}

std::string emit_qasm(const Circuit& c) {
    std::string out;
    out += "OPENQASM 2.0;\n";
    out += "include \"qelib1.inc\";\n";
    out += "qreg q[" + std::to_string(c.num_qubits) + "];\n";
    for (const Gate& g : c.gates) {
        if (g.is_routing) {
            out += "// routing\n";
        }
        out += gate_name(g.kind);
        if (gate_has_angle(g.kind)) {
            out += "(" + fmt_angle(g.angle) + ")";
        }
        out += " q[" + std::to_string(g.q0) + "]";
        if (g.arity() == 2) {
            out += ",q[" + std::to_string(g.q1) + "]";
        }
        out += ";\n";
    }
    return out;
}

void write_qasm_file(const Circuit& c, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open file for writing: " + path);
    }
    out << emit_qasm(c);
}

}  // namespace qroute
