#include "qlcu/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <sstream>

#include <json.hpp>

namespace qlcu {

Gate Gate::hadamard(std::size_t target) {
    Gate g;
    g.kind = GateKind::Hadamard;
    g.targets = {target};
    return g;
}

Gate Gate::single_qubit(std::size_t target, ComplexMatrix u, std::string label) {
    Gate g;
    g.kind = GateKind::SingleQubit;
    g.targets = {target};
    g.matrix = std::move(u);
    g.label = std::move(label);
    return g;
}

Gate Gate::cnot(std::size_t control, std::size_t target) {
    Gate g;
    g.kind = GateKind::Cnot;
    g.controls = {control};
    g.targets = {target};
    return g;
}

Gate Gate::controlled_block(std::vector<std::size_t> controls, std::size_t first_target,
                            ComplexMatrix u, std::string label) {
    Gate g;
    g.kind = GateKind::ControlledBlock;
    g.controls = std::move(controls);
    std::size_t k = 0;
    while ((std::size_t{1} << k) < u.rows()) ++k;
    for (std::size_t i = 0; i < k; ++i) g.targets.push_back(first_target + i);
    g.matrix = std::move(u);
    g.label = std::move(label);
    return g;
}

Gate Gate::block(std::size_t first_target, ComplexMatrix u, std::string label) {
    Gate g;
    g.kind = GateKind::Block;
    std::size_t k = 0;
    while ((std::size_t{1} << k) < u.rows()) ++k;
    for (std::size_t i = 0; i < k; ++i) g.targets.push_back(first_target + i);
    g.matrix = std::move(u);
    g.label = std::move(label);
    return g;
}

namespace {

void validate_gate(const Gate& g, std::size_t num_qubits) {
    for (auto q : g.targets) {
        if (q >= num_qubits) throw std::invalid_argument("gate target index out of range");
    }
    for (std::size_t i = 0; i < g.controls.size(); ++i) {
        const std::size_t q = g.controls[i];
        if (q >= num_qubits) throw std::invalid_argument("gate control index out of range");
        if (std::find(g.targets.begin(), g.targets.end(), q) != g.targets.end()) {
            throw std::invalid_argument("gate control and target sets overlap");
        }
        for (std::size_t j = i + 1; j < g.controls.size(); ++j) {
            if (g.controls[j] == q) {
                throw std::invalid_argument("duplicate control index");
            }
        }
    }
    switch (g.kind) {
        case GateKind::Hadamard:
            if (g.targets.size() != 1 || !g.controls.empty()) {
                throw std::invalid_argument("hadamard gate must have exactly one target");
            }
            break;
        case GateKind::SingleQubit:
            if (g.targets.size() != 1 || !g.controls.empty() || g.matrix.rows() != 2 ||
                g.matrix.cols() != 2) {
                throw std::invalid_argument("single-qubit gate must carry a 2x2 matrix");
            }
            break;
        case GateKind::Cnot:
            if (g.targets.size() != 1 || g.controls.size() != 1) {
                throw std::invalid_argument("cnot gate must have one control and one target");
            }
            break;
        case GateKind::ControlledBlock:
        case GateKind::Block: {
            if (g.kind == GateKind::ControlledBlock && g.controls.empty()) {
                throw std::invalid_argument("controlled block needs at least one control");
            }
            if (g.kind == GateKind::Block && !g.controls.empty()) {
                throw std::invalid_argument("block gate cannot carry controls");
            }
            if (g.targets.empty()) throw std::invalid_argument("block gate needs targets");
            for (std::size_t i = 1; i < g.targets.size(); ++i) {
                if (g.targets[i] != g.targets[i - 1] + 1) {
                    throw std::invalid_argument("block targets must be a contiguous range");
                }
            }
            const std::size_t dim = std::size_t{1} << g.targets.size();
            if (!g.matrix.is_square() || g.matrix.rows() != dim) {
                throw std::invalid_argument("block matrix dimension must be 2^(#targets)");
            }
            break;
        }
    }
}

}  // namespace

void Circuit::append(Gate g) {
    validate_gate(g, num_qubits());
    gates.push_back(std::move(g));
}

Circuit compose(const Circuit& a, const Circuit& b) {
    if (a.num_data_qubits != b.num_data_qubits ||
        a.num_ancilla_qubits != b.num_ancilla_qubits) {
        throw std::invalid_argument("compose: qubit counts do not match");
    }
    Circuit out = a;
    out.gates.insert(out.gates.end(), b.gates.begin(), b.gates.end());
    return out;
}

Circuit inverse(const Circuit& c) {
    Circuit out;
    out.num_data_qubits = c.num_data_qubits;
    out.num_ancilla_qubits = c.num_ancilla_qubits;
    out.gates.reserve(c.gates.size());
    for (auto it = c.gates.rbegin(); it != c.gates.rend(); ++it) {
        Gate g = *it;
        if (g.kind == GateKind::SingleQubit || g.kind == GateKind::ControlledBlock ||
            g.kind == GateKind::Block) {
            g.matrix = g.matrix.dagger();
        }
        out.gates.push_back(std::move(g));
    }
    return out;
}

CostReport cost_report(const Circuit& c, const std::map<std::string, long long>& block_costs) {
    CostReport report;
    bool used_doubling = false;
    for (const auto& g : c.gates) {
        CostReport::Item item;
        switch (g.kind) {
            case GateKind::Hadamard:
                item = {"H(q" + std::to_string(g.targets[0]) + ")", 1};
                break;
            case GateKind::SingleQubit:
                item = {(g.label.empty() ? std::string("U") : g.label) + "(q" +
                            std::to_string(g.targets[0]) + ")",
                        1};
                break;
            case GateKind::Cnot:
                item = {"CNOT(q" + std::to_string(g.controls[0]) + " -> q" +
                            std::to_string(g.targets[0]) + ")",
                        1};
                break;
            case GateKind::Block:
            case GateKind::ControlledBlock: {
                auto found = block_costs.find(g.label);
                if (found == block_costs.end()) {
                    throw MissingCostError("cost_report: no cost entry for block label '" +
                                           g.label + "'");
                }
                long long bound = found->second;
                std::string desc = g.label;
                if (g.kind == GateKind::ControlledBlock) {
                    if (g.matrix.rows() == 2 && bound == 1) {
                        bound = 6;  // controlled elementary single-qubit gate
                    } else {
                        bound *= 14;
                    }
                    for (std::size_t extra = 1; extra < g.controls.size(); ++extra) {
                        bound *= 2;
                        used_doubling = true;
                    }
                    desc = "controlled " + desc + " (" + std::to_string(g.controls.size()) +
                           " control" + (g.controls.size() == 1 ? "" : "s") + ")";
                }
                item = {desc, bound};
                break;
            }
        }
        report.elementary_count_upper_bound += item.bound;
        report.per_gate.push_back(std::move(item));
    }
    report.assumptions.push_back(
        "block label costs taken from the supplied table; a block and its inverse cost the same");
    report.assumptions.push_back(
        "singly controlled block: 6 gates when the block is an elementary single-qubit gate, "
        "otherwise 14 per elementary gate of the block");
    if (used_doubling) {
        report.assumptions.push_back(
            "each control beyond the first doubles the bound (conservative convention; the "
            "14-gate bound covers single controls only)");
    }
    return report;
}

Circuit qft_circuit(std::size_t n) {
    if (n == 0) throw std::invalid_argument("qft_circuit: need at least one qubit");
    Circuit c;
    c.num_data_qubits = n;
    for (std::size_t i = n; i-- > 0;) {
        c.append(Gate::hadamard(i));
        for (std::size_t k = 2; k <= i + 1; ++k) {
            const double phase = 2.0 * std::numbers::pi / static_cast<double>(std::size_t{1} << k);
            ComplexMatrix rk(2, 2);
            rk(0, 0) = 1.0;
            rk(1, 1) = cplx{std::cos(phase), std::sin(phase)};
            c.append(Gate::controlled_block({i - k + 1}, i, std::move(rk),
                                            "R" + std::to_string(k)));
        }
    }
    for (std::size_t i = 0; i < n / 2; ++i) {
        const std::size_t j = n - 1 - i;
        c.append(Gate::cnot(i, j));
        c.append(Gate::cnot(j, i));
        c.append(Gate::cnot(i, j));
    }
    return c;
}

std::string encode_hex_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%a", x);
    return buf;
}

double decode_hex_double(const std::string& s) {
    const char* begin = s.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end != begin + s.size()) {
        throw ParseError("bad hex-float literal '" + s + "'");
    }
    return v;
}

namespace {

nlohmann::json matrix_to_hex_json(const ComplexMatrix& m) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& e : m.entries()) {
        entries.push_back({encode_hex_double(e.real()), encode_hex_double(e.imag())});
    }
    return entries;
}

ComplexMatrix matrix_from_hex_json(const nlohmann::json& j, std::size_t dim,
                                   std::size_t gate_pos) {
    if (!j.is_array() || j.size() != dim * dim) {
        throw ParseError("gates[" + std::to_string(gate_pos) +
                         "]: matrix entry count does not match target count");
    }
    std::vector<cplx> data;
    data.reserve(dim * dim);
    for (const auto& e : j) {
        data.emplace_back(decode_hex_double(e.at(0).get<std::string>()),
                          decode_hex_double(e.at(1).get<std::string>()));
    }
    return ComplexMatrix(dim, dim, std::move(data));
}

std::string kind_name(GateKind k) {
    switch (k) {
        case GateKind::Hadamard: return "hadamard";
        case GateKind::SingleQubit: return "single_qubit";
        case GateKind::Cnot: return "cnot";
        case GateKind::ControlledBlock: return "controlled_block";
        case GateKind::Block: return "block";
    }
    return "?";
}

}  // namespace

std::string serialize(const Circuit& c) {
    nlohmann::json gates = nlohmann::json::array();
    for (const auto& g : c.gates) {
        nlohmann::json jg;
        jg["kind"] = kind_name(g.kind);
        jg["targets"] = g.targets;
        if (!g.controls.empty()) jg["controls"] = g.controls;
        if (!g.label.empty()) jg["label"] = g.label;
        if (g.kind == GateKind::SingleQubit || g.kind == GateKind::ControlledBlock ||
            g.kind == GateKind::Block) {
            jg["matrix"] = matrix_to_hex_json(g.matrix);
        }
        gates.push_back(std::move(jg));
    }
    nlohmann::json doc{{"version", 1},
                       {"data_qubits", c.num_data_qubits},
                       {"ancilla_qubits", c.num_ancilla_qubits},
                       {"gates", gates}};
    return doc.dump(2);
}

Circuit parse_circuit(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("circuit JSON: ") + e.what());
    }
    try {
        if (doc.at("version").get<int>() != 1) {
            throw ParseError("circuit JSON: unsupported version");
        }
        Circuit c;
        c.num_data_qubits = doc.at("data_qubits").get<std::size_t>();
        c.num_ancilla_qubits = doc.at("ancilla_qubits").get<std::size_t>();
        const auto& gates = doc.at("gates");
        for (std::size_t pos = 0; pos < gates.size(); ++pos) {
            const auto& jg = gates[pos];
            const auto kind = jg.at("kind").get<std::string>();
            Gate g;
            if (kind == "hadamard") {
                g.kind = GateKind::Hadamard;
            } else if (kind == "single_qubit") {
                g.kind = GateKind::SingleQubit;
            } else if (kind == "cnot") {
                g.kind = GateKind::Cnot;
            } else if (kind == "controlled_block") {
                g.kind = GateKind::ControlledBlock;
            } else if (kind == "block") {
                g.kind = GateKind::Block;
            } else {
                throw ParseError("gates[" + std::to_string(pos) + "]: unknown gate kind '" +
                                 kind + "'");
            }
            g.targets = jg.at("targets").get<std::vector<std::size_t>>();
            if (jg.contains("controls")) {
                g.controls = jg.at("controls").get<std::vector<std::size_t>>();
            }
            if (jg.contains("label")) g.label = jg.at("label").get<std::string>();
            if (g.kind == GateKind::SingleQubit || g.kind == GateKind::ControlledBlock ||
                g.kind == GateKind::Block) {
                const std::size_t dim = std::size_t{1} << g.targets.size();
                g.matrix = matrix_from_hex_json(jg.at("matrix"), dim, pos);
            }
            try {
                c.append(std::move(g));
            } catch (const std::invalid_argument& e) {
                throw ParseError("gates[" + std::to_string(pos) + "]: " + e.what());
            }
        }
        return c;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("circuit JSON: ") + e.what());
    }
}

}  // namespace qlcu
