#include "circuit.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "error.hpp"

namespace qroute {

void CnotCircuit::add(int control, int target) {
    if (control == target) {
        throw Error(ErrorCode::invalid_argument, "CNOT control and target must differ");
    }
    if (control < 0 || target < 0 || control >= num_qubits || target >= num_qubits) {
        throw Error(ErrorCode::invalid_argument, "gate index out of range");
    }
    gates.push_back({control, target});
}

QubitMap::QubitMap(std::vector<int> phi_) : phi(std::move(phi_)) {
    std::set<int> seen;
    for (int v : phi) {
        if (v < 0) {
            throw Error(ErrorCode::invalid_argument, "qubit map entries must be non-negative");
        }
        if (!seen.insert(v).second) {
            throw Error(ErrorCode::invalid_argument, "qubit map must be injective");
        }
    }
}

QubitMap QubitMap::identity(int n) {
    std::vector<int> phi(static_cast<size_t>(n));
    for (int i = 0; i < n; i++) {
        phi[static_cast<size_t>(i)] = i;
    }
    return QubitMap(phi);
}

namespace {

struct Cursor {
    const std::string& text;
    size_t pos = 0;
    int line = 1;
    int col = 1;

    [[noreturn]] void fail(const std::string& msg) const {
        std::ostringstream os;
        os << "parse error at line " << line << ", column " << col << ": " << msg;
        throw Error(ErrorCode::parse, os.str());
    }

    bool done() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }

    void advance() {
        if (text[pos] == '\n') {
            line++;
            col = 1;
        } else {
            col++;
        }
        pos++;
    }

    void skip_space_and_comments(bool hash_comments, bool slash_comments) {
        for (;;) {
            while (!done() && std::isspace(static_cast<unsigned char>(peek()))) {
                advance();
            }
            if (hash_comments && !done() && peek() == '#') {
                while (!done() && peek() != '\n') advance();
                continue;
            }
            if (slash_comments && pos + 1 < text.size() && text[pos] == '/' && text[pos + 1] == '/') {
                while (!done() && peek() != '\n') advance();
                continue;
            }
            return;
        }
    }

    std::string word() {
        std::string w;
        while (!done() && !std::isspace(static_cast<unsigned char>(peek())) && peek() != '#') {
            w.push_back(peek());
            advance();
        }
        return w;
    }

    int integer(const std::string& what) {
        bool any = false;
        long v = 0;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
            any = true;
            v = v * 10 + (peek() - '0');
            if (v > (1L << 20)) {
                fail(what + " out of range");
            }
            advance();
        }
        if (!any) {
            fail("expected " + what);
        }
        return static_cast<int>(v);
    }

    void expect(const std::string& token) {
        for (char c : token) {
            if (done() || peek() != c) {
                fail("expected '" + token + "'");
            }
            advance();
        }
    }
};

CnotCircuit parse_simple(const std::string& text) {
    Cursor cur{text};
    cur.skip_space_and_comments(true, false);
    std::string head = cur.word();
    if (head != "qubits") {
        cur.fail("expected 'qubits N' header");
    }
    cur.skip_space_and_comments(true, false);
    CnotCircuit c;
    c.num_qubits = cur.integer("qubit count");
    if (c.num_qubits < 1) {
        cur.fail("qubit count must be positive");
    }
    for (;;) {
        cur.skip_space_and_comments(true, false);
        if (cur.done()) {
            break;
        }
        std::string op = cur.word();
        if (op != "cx") {
            cur.fail("unknown statement '" + op + "' (only 'cx A B' lines are allowed)");
        }
        cur.skip_space_and_comments(true, false);
        int a = cur.integer("control index");
        cur.skip_space_and_comments(true, false);
        int b = cur.integer("target index");
        if (a >= c.num_qubits || b >= c.num_qubits) {
            cur.fail("gate index exceeds declared register size");
        }
        if (a == b) {
            cur.fail("control equals target");
        }
        c.gates.push_back({a, b});
    }
    return c;
}

CnotCircuit parse_qasm_lite(const std::string& text) {
    Cursor cur{text};
    cur.skip_space_and_comments(false, true);
    cur.expect("OPENQASM");
    cur.skip_space_and_comments(false, true);
    std::string version = cur.word();
    if (version != "2.0;") {
        cur.fail("expected version '2.0;'");
    }
    cur.skip_space_and_comments(false, true);

    cur.expect("qreg");
    cur.skip_space_and_comments(false, true);
    std::string reg;
    while (!cur.done() && (std::isalnum(static_cast<unsigned char>(cur.peek())) || cur.peek() == '_')) {
        reg.push_back(cur.peek());
        cur.advance();
    }
    if (reg.empty()) {
        cur.fail("expected register name");
    }
    cur.expect("[");
    CnotCircuit c;
    c.num_qubits = cur.integer("register size");
    if (c.num_qubits < 1) {
        cur.fail("register size must be positive");
    }
    cur.expect("]");
    cur.skip_space_and_comments(false, true);
    cur.expect(";");

    for (;;) {
        cur.skip_space_and_comments(false, true);
        if (cur.done()) {
            break;
        }
        std::string op = cur.word();
        // Reject any non-CX statement outright rather than skipping it: a
        // silently dropped gate would change the circuit semantics.
        if (op.rfind("cx", 0) != 0) {
            cur.fail("non-CNOT statement '" + op + "'");
        }
        std::string rest = op.substr(2);
        std::string stmt = rest;
        while (stmt.find(';') == std::string::npos) {
            cur.skip_space_and_comments(false, true);
            if (cur.done()) {
                cur.fail("unterminated cx statement");
            }
            stmt += cur.word();
        }
        // stmt now looks like "q[1],q[0];"
        std::string expect_prefix = reg + "[";
        auto read_index = [&](size_t& p) {
            if (stmt.compare(p, expect_prefix.size(), expect_prefix) != 0) {
                cur.fail("expected operand '" + reg + "[i]'");
            }
            p += expect_prefix.size();
            size_t end = stmt.find(']', p);
            if (end == std::string::npos) {
                cur.fail("expected ']'");
            }
            int idx = 0;
            for (size_t k = p; k < end; k++) {
                if (!std::isdigit(static_cast<unsigned char>(stmt[k]))) {
                    cur.fail("expected qubit index");
                }
                idx = idx * 10 + (stmt[k] - '0');
            }
            p = end + 1;
            return idx;
        };
        size_t p = 0;
        int a = read_index(p);
        if (p >= stmt.size() || stmt[p] != ',') {
            cur.fail("expected ','");
        }
        p++;
        int b = read_index(p);
        if (p >= stmt.size() || stmt[p] != ';') {
            cur.fail("expected ';'");
        }
        if (a >= c.num_qubits || b >= c.num_qubits) {
            cur.fail("gate index exceeds declared register size");
        }
        if (a == b) {
            cur.fail("control equals target");
        }
        c.gates.push_back({a, b});
    }
    return c;
}

} // namespace

CnotCircuit parse_circuit(const std::string& text, CircuitFormat format) {
    switch (format) {
        case CircuitFormat::simple:
            return parse_simple(text);
        case CircuitFormat::qasm_lite:
            return parse_qasm_lite(text);
    }
    throw Error(ErrorCode::invalid_argument, "unknown circuit format");
}

std::string emit_circuit(const CnotCircuit& c, CircuitFormat format) {
    std::ostringstream os;
    if (format == CircuitFormat::simple) {
        os << "qubits " << c.num_qubits << "\n";
        for (const Gate& g : c.gates) {
            os << "cx " << g.control << " " << g.target << "\n";
        }
    } else {
        os << "OPENQASM 2.0;\n";
        os << "qreg q[" << c.num_qubits << "];\n";
        for (const Gate& g : c.gates) {
            os << "cx q[" << g.control << "],q[" << g.target << "];\n";
        }
    }
    return os.str();
}

CnotCircuit compose(const CnotCircuit& a, const CnotCircuit& b) {
    if (a.num_qubits != b.num_qubits) {
        throw Error(ErrorCode::invalid_argument, "cannot compose circuits of different widths");
    }
    CnotCircuit out = a;
    out.gates.insert(out.gates.end(), b.gates.begin(), b.gates.end());
    return out;
}

CnotCircuit apply_map(const CnotCircuit& c, const QubitMap& m) {
    if (m.size() < c.num_qubits) {
        throw Error(ErrorCode::invalid_argument, "qubit map does not cover all wires");
    }
    int width = 0;
    for (int i = 0; i < c.num_qubits; i++) {
        width = std::max(width, m(i) + 1);
    }
    CnotCircuit out;
    out.num_qubits = width;
    out.gates.reserve(c.gates.size());
    for (const Gate& g : c.gates) {
        out.gates.push_back({m(g.control), m(g.target)});
    }
    return out;
}

} // namespace qroute
